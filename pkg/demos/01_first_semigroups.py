"""A guided tour of single numerical semigroups.

Build semigroups from generators or gap sets, read off their invariants,
and walk one step of the genus tree by hand.
"""

import json

import sgforge as sf

print("=" * 70)
print("Constructing semigroups")
print("=" * 70)

s = sf.from_generators({3, 5})
print(f"\n<3,5> = {{0, 3, 5, 6, 8, 9, ...}}")
print(f"  gaps        : {s.gaps()}")
print(f"  Frobenius   : {s.frobenius}   (largest gap; 3*5 - 3 - 5 = 7)")
print(f"  genus       : {s.genus}   (number of gaps; (3-1)(5-1)/2 = 4)")
print(f"  multiplicity: {s.multiplicity}")
print(f"  generators  : {s.min_generators}")

print(f"\nApery set of <3,5> mod 3: {s.apery_set(3)}")
print("  entry i = least member congruent to i; max entry - 3 = Frobenius")

trivial = sf.from_generators({1})
print(f"\nThe whole of N0: F = {trivial.frobenius}, genus {trivial.genus}")

print("\n" + "=" * 70)
print("One step of the genus tree")
print("=" * 70)

s = sf.from_generators({2, 3})
print(f"\n<2,3> has Frobenius number {s.frobenius}.")
print("Its minimal generators above F are the *effective* ones; removing")
print("one produces a child of genus + 1:")
for tag in s.effective_generators():
    child = s.remove_generator(tag.value)
    print(f"  remove {tag.value} ({tag.strength.value:6s}) -> "
          f"<{','.join(map(str, child.min_generators))}>  "
          f"F={child.frobenius} g={child.genus}")

print("\n" + "=" * 70)
print("Weight data and the lattice-path partition")
print("=" * 70)

for gens in [{3, 4}, {2, 9}, {4, 5, 6}]:
    s = sf.from_generators(gens)
    weight, ewt, part = s.weight_data()
    print(f"\n<{','.join(map(str, sorted(gens)))}>: gaps {s.gaps()}")
    print(f"  weight {weight}, effective weight {ewt}, "
          f"partition {part.parts} (size {part.size} = weight + genus)")

print("\n" + "=" * 70)
print("The machine-readable record (what `sgforge inspect` prints)")
print("=" * 70)
print()
print(json.dumps(sf.from_generators({4, 6, 9}).to_record(), indent=2))
