"""Leibniz superalgebras from dialgebras; gl/sl, supertrace, centre,
perfectness, and the bracket-formula and identity property suites."""

import pytest

from uce_lab.leibniz import centre, from_dialgebra, gl, is_perfect, sl
from uce_lab.superdialg import builtin_dialgebra, catalog_names

UNITAL = [n for n in catalog_names() if builtin_dialgebra(n).is_unital]


# ---------------------------------------------------------------------------
# from_dialgebra
# ---------------------------------------------------------------------------


def test_commutative_algebra_gives_abelian_bracket():
    l = from_dialgebra(builtin_dialgebra("dual_numbers_q"))
    assert l.table == {}


def test_bar_duplex_bracket_vanishes():
    # x <| y = x s(y) equals y |> x = s(y) x, so the bracket is zero
    l = from_dialgebra(builtin_dialgebra("bar_duplex_q"))
    assert l.table == {}


def test_mat2_gives_gl2_commutator():
    l = from_dialgebra(builtin_dialgebra("mat2_q"))
    e12, e21 = l.basis_vector(1), l.basis_vector(2)
    assert l.bracket(e12, e21) == [1, 0, 0, -1]               # E11 - E22
    assert l.bracket(e21, e12) == [-1, 0, 0, 1]


# ---------------------------------------------------------------------------
# gl
# ---------------------------------------------------------------------------


def test_gl_1_0_is_abelian():
    assert gl(1, 0, builtin_dialgebra("rationals")).algebra.table == {}


def test_gl_2_0_classical_commutator():
    g = gl(2, 0, builtin_dialgebra("rationals"))
    v = g.algebra.bracket(g.unit_vector(1, 2, [1]), g.unit_vector(2, 1, [1]))
    expect = [0] * 4
    expect[g.unit_index(1, 1, 0)] = 1
    expect[g.unit_index(2, 2, 0)] = -1
    assert v == expect


def test_gl_1_1_super_sign():
    # both generators odd: [E12, E21] = E11 + E22
    g = gl(1, 1, builtin_dialgebra("rationals"))
    v = g.algebra.bracket(g.unit_vector(1, 2, [1]), g.unit_vector(2, 1, [1]))
    expect = [0] * 4
    expect[g.unit_index(1, 1, 0)] = 1
    expect[g.unit_index(2, 2, 0)] = 1
    assert v == expect


def test_gl_grading():
    g = gl(1, 1, builtin_dialgebra("grassmann_q"))
    x_odd = g.unit_index(1, 1, 1)   # E11(x): |1|+|1|+|x| = 1
    e12_1 = g.unit_index(1, 2, 0)   # E12(1): 0+1+0 = 1
    e12_x = g.unit_index(1, 2, 1)   # E12(x): 0+1+1 = 0
    assert g.algebra.parity(x_odd) == 1
    assert g.algebra.parity(e12_1) == 1
    assert g.algebra.parity(e12_x) == 0


@pytest.mark.parametrize("m,n,name", [
    (2, 0, "rationals"), (1, 1, "rationals"), (2, 1, "rationals"),
    (1, 1, "grassmann_q"), (2, 0, "dual_numbers_q"), (1, 1, "f2"),
])
def test_gl_bracket_formula_on_matrix_units(m, n, name):
    """[E_ij(a), E_kl(b)] = d_jk E_il(a <| b)
    - (-1)^{|E_ij(a)||E_kl(b)|} d_il E_kj(b |> a), checked exhaustively."""
    d = builtin_dialgebra(name)
    g = gl(m, n, d)
    size = m + n
    ring = d.ring
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            for a in range(d.dim):
                for k in range(1, size + 1):
                    for l in range(1, size + 1):
                        for b in range(d.dim):
                            x = g.unit_vector(i, j, d.basis_vector(a))
                            y = g.unit_vector(k, l, d.basis_vector(b))
                            got = g.algebra.bracket(x, y)
                            px = (g.row_parity(i) + g.row_parity(j) + d.parity(a)) % 2
                            py = (g.row_parity(k) + g.row_parity(l) + d.parity(b)) % 2
                            expect = [ring.zero] * g.algebra.dim
                            if j == k:
                                ab = d.lmul(d.basis_vector(a), d.basis_vector(b))
                                for t, c in enumerate(ab):
                                    if c != 0:
                                        expect[g.unit_index(i, l, t)] += c
                            if i == l:
                                ba = d.rmul(d.basis_vector(b), d.basis_vector(a))
                                sgn = -ring.one if (px * py) % 2 else ring.one
                                for t, c in enumerate(ba):
                                    if c != 0:
                                        expect[g.unit_index(k, j, t)] -= sgn * c
                            assert got == [ring.normalize(v) for v in expect]


# ---------------------------------------------------------------------------
# supertrace
# ---------------------------------------------------------------------------


def test_supertrace_signs():
    g = gl(2, 1, builtin_dialgebra("rationals"))
    assert g.supertrace(g.unit_vector(1, 1, [1])) == [1]
    assert g.supertrace(g.unit_vector(3, 3, [1])) == [-1]
    gg = gl(2, 1, builtin_dialgebra("grassmann_q"))
    assert gg.supertrace(gg.unit_vector(3, 3, [0, 1])) == [0, 1]
    assert gg.supertrace(gg.unit_vector(3, 3, [1, 0])) == [-1, 0]
    assert gg.supertrace(gg.unit_vector(1, 3, [1, 0])) == [0, 0]


# ---------------------------------------------------------------------------
# sl
# ---------------------------------------------------------------------------


def test_sl_dimensions():
    assert sl(2, 0, builtin_dialgebra("rationals")).algebra.dim == 3
    assert sl(2, 2, builtin_dialgebra("rationals")).algebra.dim == 15
    # supertrace lands in [D, D] = 0 for the abelian duplex: codim = dim D
    assert sl(2, 2, builtin_dialgebra("bar_duplex_q")).algebra.dim == 30
    assert sl(2, 1, builtin_dialgebra("mat2_q")).algebra.dim == 35


@pytest.mark.parametrize("m,n,name", [
    (2, 0, "rationals"), (2, 1, "rationals"), (1, 1, "grassmann_q"),
    (2, 1, "dual_numbers_q"), (2, 0, "bar_duplex_q"), (2, 1, "f2"),
    (2, 1, "f3"), (2, 0, "mat2_q"), (2, 2, "grassmann_q"),
])
def test_sl_supertrace_characterization_cross_check(m, n, name):
    # construction raises when [gl, gl] differs from the supertrace condition
    sl(m, n, builtin_dialgebra(name), cross_check=True)


@pytest.mark.parametrize("m,n,name", [
    (2, 1, "rationals"), (1, 1, "grassmann_q"), (2, 1, "f2"),
])
def test_sl_bracket_on_generators_matches_formula(m, n, name):
    # the bracket computed through sl coordinates agrees with
    # d_jk E_il(a <| b) - sign d_il E_kj(b |> a) for off-diagonal units
    d = builtin_dialgebra(name)
    s = sl(m, n, d, cross_check=False)
    g = s.gl
    ring = d.ring
    size = m + n
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if i == j:
                continue
            for k in range(1, size + 1):
                for l in range(1, size + 1):
                    if k == l:
                        continue
                    for a in range(d.dim):
                        for b in range(d.dim):
                            x = s.coords_of_unit(i, j, d.basis_vector(a))
                            y = s.coords_of_unit(k, l, d.basis_vector(b))
                            got = s.embed(s.algebra.bracket(x, y))
                            px = (g.row_parity(i) + g.row_parity(j) + d.parity(a)) % 2
                            py = (g.row_parity(k) + g.row_parity(l) + d.parity(b)) % 2
                            expect = [ring.zero] * g.algebra.dim
                            if j == k:
                                for t, c in enumerate(d.lmul(d.basis_vector(a), d.basis_vector(b))):
                                    if c != 0:
                                        expect[g.unit_index(i, l, t)] += c
                            if i == l:
                                sgn = -ring.one if (px * py) % 2 else ring.one
                                for t, c in enumerate(d.rmul(d.basis_vector(b), d.basis_vector(a))):
                                    if c != 0:
                                        expect[g.unit_index(k, j, t)] -= sgn * c
                            assert got == [ring.normalize(v) for v in expect]


def test_sl_off_diagonal_units_are_members():
    s = sl(2, 1, builtin_dialgebra("dual_numbers_q"))
    coords = s.coords_of_unit(1, 3, [0, 1])
    assert any(c != 0 for c in coords)
    back = s.embed(coords)
    assert back == s.gl.unit_vector(1, 3, [0, 1])


# ---------------------------------------------------------------------------
# centre / perfectness
# ---------------------------------------------------------------------------


def test_centre_of_abelian_is_everything():
    l = gl(1, 0, builtin_dialgebra("dual_numbers_q")).algebra
    assert centre(l).cols == l.dim


def test_centre_of_sl2_is_zero():
    assert centre(sl(2, 0, builtin_dialgebra("rationals")).algebra).cols == 0


def test_centre_of_gl2_is_scalars():
    z = centre(gl(2, 0, builtin_dialgebra("rationals")).algebra)
    assert z.cols == 1
    col = z.column_dense(0)
    assert col[0] == col[3] != 0 and col[1] == col[2] == 0


def test_perfectness():
    assert is_perfect(sl(2, 1, builtin_dialgebra("rationals")).algebra)
    assert is_perfect(sl(3, 0, builtin_dialgebra("f2")).algebra)
    assert not is_perfect(gl(1, 0, builtin_dialgebra("rationals")).algebra)
    assert not is_perfect(gl(2, 0, builtin_dialgebra("rationals")).algebra)


# ---------------------------------------------------------------------------
# Leibniz identity property suite
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("name", catalog_names())
def test_leibniz_identity_from_dialgebra(name):
    l = from_dialgebra(builtin_dialgebra(name))
    assert l.leibniz_violations() == []
    assert l.parity_violations() == []


@pytest.mark.parametrize("m,n,name", [
    (2, 0, "rationals"), (1, 1, "rationals"), (2, 1, "rationals"),
    (1, 1, "grassmann_q"), (2, 1, "grassmann_q"), (2, 2, "rationals"),
    (2, 0, "mat2_q"), (3, 1, "f2"), (2, 2, "f3"), (3, 2, "rationals"),
])
def test_leibniz_identity_matrix_algebras(m, n, name):
    # exhaustive on all basis triples up to dimension 40, sampled above
    g = gl(m, n, builtin_dialgebra(name))
    assert g.algebra.leibniz_violations() == []
    s = sl(m, n, builtin_dialgebra(name), cross_check=False)
    assert s.algebra.leibniz_violations() == []
    assert s.algebra.parity_violations() == []
