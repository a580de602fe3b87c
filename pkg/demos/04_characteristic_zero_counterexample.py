"""The (2,2) case keeps its extra classes even in characteristic zero.

Earlier literature asserted the extra summand vanishes when 2 is invertible.
The D_0 part of W(2,2,D) = D_2^4 (+) D_0^2 does not care about torsion: for
any dialgebra with D_0 = D / (bracket ideal) nonzero, the computed
HL_2(sl(2,2,D)) strictly contains HHS_1(D).  The simplest witness is D = Q.
"""

from uce_lab.theorems import char_zero_counterexample_check

for name in ("rationals", "dual_numbers_q", "bar_duplex_q", "mat2_q"):
    rep = char_zero_counterexample_check(name)
    print(f"D = {name}:")
    if not rep.applicable:
        print("  not applicable: the bracket ideal is everything, D_0 = 0")
        continue
    print("  W(2,2,D)   =", rep.w_invariants.describe())
    print("  HHS_1(D)   =", rep.hhs1_invariants.describe())
    print("  HL_2(sl)   =", rep.hl2_invariants.describe())
    print("  extra classes survive in characteristic zero:", rep.ok)
