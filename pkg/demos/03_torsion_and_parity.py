"""Integer torsion and parity shifts in the low-rank kernel classes.

The degree-2 homology of sl(m, n, D) decomposes as HHS_1(D) plus an extra
summand built from quotients D_m = D / (mD + bracket ideal):

    m+n >= 5 or (2,1):  nothing extra
    (3,0):              six copies of D_3
    (4,0):              six copies of D_2
    (3,1):              six parity-shifted copies of D_2
    (2,2):              four copies of D_2 and two of D_0

Over the integers the (4,0) summand is honest 2-torsion, detected by Smith
normal form; over F_2 in the (3,1) grading the same classes come out odd.
"""

from uce_lab.hochschild import hhs1
from uce_lab.leibniz import sl
from uce_lab.superdialg import builtin_dialgebra
from uce_lab.tensorsq import tensor_square, w_cycles
from uce_lab.theorems import CaseLabel, expected_w, verify_case

Z = builtin_dialgebra("integers")
F2 = builtin_dialgebra("f2")

print("expected extra summands:")
for m, n, name in [(4, 0, "integers"), (4, 0, "f2"), (3, 1, "f2"),
                   (3, 0, "f3"), (2, 2, "rationals"), (3, 2, "rationals")]:
    print(f"  W({m},{n},{name}) = "
          f"{expected_w(m, n, builtin_dialgebra(name)).describe()}")

print("\n(4,0) over the integers: torsion via Smith normal form")
s = sl(4, 0, Z)
ts = tensor_square(s.algebra)
print("  HL2(sl(4,0,Z)) =", ts.kernel_invariants().describe())
rep = w_cycles(s, ts)
print("  spanned by the classes E_ij(1) (x) E_kl(1):",
      rep.span_invariants.describe())
print("  relations v_ijkl = -v_ilkj = -v_kjil = v_klij hold:",
      rep.relations_hold)
print("  2 v = 0 and v([a,b]-coefficients) = 0 hold:",
      rep.torsion_relations_hold)

print("\n(3,1) over F_2: the same classes, shifted odd")
rep31 = verify_case(CaseLabel(3, 1, "f2"))
print("  computed:", rep31.computed_chain.describe())
print("  certificates:", len(rep31.certificates), "kernel-class labels, e.g.",
      rep31.certificates[0])

print("\nHHS_1 alone in the stable range:")
for name in ("rationals", "dual_numbers_q", "grassmann_q"):
    print(f"  HHS_1({name}) = {hhs1(builtin_dialgebra(name)).describe()}")
print("  HL2(sl(3,2,Q)) =",
      verify_case(CaseLabel(3, 2, "rationals")).computed_chain.describe(),
      "(matches HHS_1(Q) = 0)")
