"""Kunz coordinates: counting semigroups as lattice points.

A multiplicity-m semigroup corresponds to an integer point of a rational
polyhedral cone in R^(m-1); fixing the coordinate sum g slices out a
polytope whose lattice points are exactly the (m, g) semigroups.  Counting
those points gives N(m, g) with no tree in sight, so the two routes check
each other.
"""

import sgforge as sf

print("Coordinates of some familiar semigroups:")
for gens in [{2, 5}, {3, 5}, {4, 6, 7, 9}, {5, 6, 7, 8, 9}]:
    s = sf.from_generators(gens)
    v = sf.kunz_vector(s)
    print(f"  <{','.join(map(str, sorted(gens)))}>"
          f"  m={v.m}  k={v.coords}  (sum = genus = {v.genus})")

print("\nRound trip: coordinates -> semigroup -> coordinates")
for m, coords in [(2, (2,)), (4, (2, 1, 1)), (5, (1, 2, 1, 1))]:
    s = sf.semigroup_from_kunz(m, coords)
    back = sf.kunz_vector(s)
    print(f"  ({m}, {coords}) -> gaps {s.gaps()} -> ({back.m}, {back.coords})")

print("\nThe inequality system rejects non-semigroup points:")
print(f"  satisfies(3, (3, 1)) = {sf.satisfies_kunz(3, (3, 1))}")
print(f"  satisfies(3, (1, 3)) = {sf.satisfies_kunz(3, (1, 3))}"
      "   (2 k1 >= k2 fails)")

print("\nPolytope counts against the tree census (m rows, g columns):")
census = sf.enumerate_tree(12)
print("m\\g " + "".join(f"{g:>5}" for g in range(1, 13)))
mismatches = 0
for m in range(2, 9):
    cells = []
    for g in range(1, 13):
        poly = sf.count_by_polytope(m, g)
        if poly != census.n_mg(m, g):
            mismatches += 1
        cells.append(poly or "")
    print(f"{m:>3} " + "".join(f"{c:>5}" for c in cells))
print(f"mismatches vs tree: {mismatches}")

print("\nThe truncation recurrence N(m-1, g-1) + N(m-1, g-2) = N(m, g)")
print("holds whenever 2g < 3m, witnessed by dropping the last coordinate:")
for m, g in [(7, 10), (9, 10), (6, 8)]:
    ok, _ = sf.recurrence_bijection_check(m, g)
    lhs = census.n_mg(m - 1, g - 1) + census.n_mg(m - 1, g - 2)
    print(f"  ({m}, {g}): {census.n_mg(m - 1, g - 1)} + "
          f"{census.n_mg(m - 1, g - 2)} = {lhs} = N({m},{g}) = "
          f"{census.n_mg(m, g)}   bijection: {ok}")

print("\nExact column formula: N(3, g) = ceil((g+1)/3) for g >= 2:")
row = [sf.count_by_polytope(3, g) for g in range(2, 20)]
print(f"  N(3, 2..19) = {row}")
