"""Group algebras as Hopf algebras: exact axiom checks, duals, antipodes.

A bialgebra is handed to the library as structure constants; every axiom
is then a finite matrix identity which is checked exactly (rationals or a
prime field, never floats).
"""

from braidalg import (
    QQ,
    check_bialgebra,
    dual_bialgebra,
    group_algebra,
    monoid_algebra,
    opposites,
    s3_table,
    solve_antipode,
)

# -- the symmetric group S3 as a Hopf algebra --------------------------------

table, names = s3_table()
H = group_algebra(table, names)
print("basis of kS3:", names)

report = check_bialgebra(H, "hopf")
print(report)
assert report.passed

# kS3 is cocommutative (Delta(g) = g (x) g) but not commutative
mu_op, delta_op = opposites(H)
print("\ncocommutative:", delta_op.matrix == H.delta.matrix)
print("commutative:  ", mu_op.matrix == H.mu.matrix)

# -- the dual Hopf algebra -----------------------------------------------------

# The dual multiplication pairs against the comultiplication in reversed
# order: (l1 l2)(h) = l1(h_(2)) l2(h_(1)).  Dualising twice is the identity.
H_dual = dual_bialgebra(H)
print("\ndual bialgebra passes:", check_bialgebra(H_dual, "hopf").passed)
H_again = dual_bialgebra(H_dual)
print("double dual == original:", H_again.mu.matrix == H.mu.matrix)

# -- solving for antipodes -------------------------------------------------------

# The antipode equation is linear in the entries of s; the solver builds
# that system, solves one half and verifies the other half exactly.
s = solve_antipode(H)
print("\nantipode found for kS3:", s is not None)
print("matches g -> g^{-1}:", s.matrix == H.antipode.matrix)

# A monoid algebra without inverses has no antipode: the idempotent monoid
# {1, e} with e.e = e gives a bialgebra whose linear system is inconsistent.
M = monoid_algebra([[0, 1], [1, 1]], names=("1", "e"))
print("monoid bialgebra passes bialgebra level:", check_bialgebra(M, "bialgebra").passed)
print("monoid antipode:", solve_antipode(M))
