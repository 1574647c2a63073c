#!/usr/bin/env python3
"""Regenerate the bundled reference-sequence snapshots in core/data/oeis/.

Values come from direct enumeration (FKM necklace generation, brute-force
circular matchings), never from the closed-form counting formulas, so the
snapshots stay an independent check on the C++ library.
"""
import itertools
import pathlib
import sys

OUT = pathlib.Path(__file__).resolve().parent.parent / "core" / "data" / "oeis"


def necklaces(length):
    """Binary necklaces of the given length (FKM algorithm), as tuples."""
    if length == 0:
        yield ()
        return
    a = [0] * (length + 1)

    def gen(t, p):
        if t > length:
            if length % p == 0:
                yield tuple(a[1:])
        else:
            a[t] = a[t - p]
            yield from gen(t + 1, p)
            for j in range(a[t - p] + 1, 2):
                a[t] = j
                yield from gen(t + 1, t)

    yield from gen(1, 1)


def necklace_counts(max_length):
    """N[length][ones] = number of binary necklaces with that many ones."""
    table = []
    for length in range(max_length + 1):
        row = [0] * (length + 1)
        for w in necklaces(length):
            row[sum(w)] += 1
        table.append(row)
    return table


def circular_classes(n):
    """Non-crossing perfect matchings of 2n points on a circle up to rotation."""
    size = 2 * n
    seen = set()

    def dyck(prefix, opened, closed):
        if len(prefix) == size:
            yield prefix
            return
        if opened < n:
            yield from dyck(prefix + "U", opened + 1, closed)
        if closed < opened:
            yield from dyck(prefix + "D", opened, closed + 1)

    for word in dyck("", 0, 0):
        partner = [0] * size
        stack = []
        for i, c in enumerate(word):
            if c == "U":
                stack.append(i)
            else:
                j = stack.pop()
                partner[i], partner[j] = j, i
        best = None
        for r in range(size):
            enc = "".join("U" if (partner[(i - r) % size] + r) % size > i else "D"
                          for i in range(size))
            if best is None or enc < best:
                best = enc
        seen.add(best)
    return len(seen)


def write(name, pairs, comment):
    path = OUT / f"b{name[1:]}.txt"
    with path.open("w") as f:
        f.write(f"# {name} {comment}\n")
        for idx, val in pairs:
            f.write(f"{idx} {val}\n")
    print("wrote", path)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    N = necklace_counts(24)
    # A003239: necklaces with n black and n white beads.
    write("A003239", [(n, N[2 * n][n]) for n in range(13)], "bundled snapshot")
    # A007595 / A003441: necklaces with n white and n+p black beads.
    write("A007595", [(n, N[2 * n + 2][n]) for n in range(12)], "bundled snapshot")
    write("A003441", [(n, N[2 * n + 3][n]) for n in range(11)], "bundled snapshot")
    # A047996: triangle T(len, white), read by rows.
    flat = [N[length][w] for length in range(17) for w in range(length + 1)]
    write("A047996", list(enumerate(flat)), "bundled snapshot, triangle by rows")
    # A241926: triangle T(black, white), 0 <= white <= black, read by rows.
    flat = [N[b + w][w] for b in range(13) for w in range(b + 1)]
    write("A241926", list(enumerate(flat)), "bundled snapshot, triangle by rows")
    # A002995: plane trees with j nodes; a(n+1) counts circular matchings of order n.
    vals = [(0, 1), (1, 1)] + [(n + 1, circular_classes(n)) for n in range(1, 11)]
    write("A002995", vals, "bundled snapshot")


if __name__ == "__main__":
    sys.exit(main())
