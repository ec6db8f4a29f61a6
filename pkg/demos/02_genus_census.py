"""Census of all numerical semigroups by genus.

One depth-first walk of the semigroup tree produces every count at once:
N(g), the multiplicity table N(m, g), the efficacy distribution t(g, h),
Frobenius-number counts, and the Fibonacci-like growth ratios.
"""

import time

import sgforge as sf

G = 20

t0 = time.perf_counter()
census = sf.enumerate_tree(G)
elapsed = time.perf_counter() - t0
total = sum(census.n_of_g)
print(f"Enumerated {total:,} semigroups of genus <= {G} "
      f"in {elapsed:.2f}s ({total / elapsed / 1e6:.2f}M nodes/s)\n")

print("g :", "  ".join(f"{g}" for g in range(16)))
print("N :", "  ".join(f"{census.n(g)}" for g in range(16)))

print("\nThe multiplicity table N(m, g) for g <= 10 (rows g, columns m):")
print("g\\m " + "".join(f"{m:>6}" for m in range(2, 12)))
for g in range(1, 11):
    row = [census.n_mg(m, g) or "" for m in range(2, 12)]
    print(f"{g:>3} " + "".join(f"{c:>6}" for c in row))

print("\nGrowth ratios (the Fibonacci signature):")
print("  g   (N(g-1)+N(g-2))/N(g)   N(g)/N(g-1)")
for g in range(4, G + 1, 4):
    n, n1, n2 = census.n(g), census.n(g - 1), census.n(g - 2)
    print(f"{g:>3}   {(n1 + n2) / n:>19.5f}   {n / n1:>11.5f}")
print(f"  (golden ratio = {sf.conjectures.PHI:.5f})")

print("\nEfficacy distribution at genus 12 (h = number of children):")
for h in range(14):
    c = census.t_gh(12, h)
    if c:
        print(f"  h={h:>2}: {c:>4}  {'#' * (60 * c // census.n(12))}")
print(f"  check: sum h * t(12, h) = {sum(h * census.t_gh(12, h) for h in range(15))}"
      f" = N(13) = {census.n(13)}")

print("\nCounting by Frobenius number instead (pruned walk, exact):")
ns = sf.ns_by_frobenius(20)
print("  F :", "  ".join(f"{f}" for f in range(1, 16)))
print("  ns:", "  ".join(f"{ns[f]}" for f in range(1, 16)))
drops = [f for f in range(2, 20) if ns[f] < ns[f - 1]]
print(f"  ns(F) is NOT monotone; it drops at F = {drops}")

print("\nStrong descents and the r-sequence:")
sc = sf.strongly_descended_census(census)
print("  S(g):", list(sc.by_genus[:13]))
print("  r(n) = s(2n+1, n+1):", {n: sc.r[n] for n in sorted(sc.r)})
