"""Superdialgebra constructors, validation, the bracket ideal and the
quotients D_m, plus the structural identity suite for unital dialgebras."""

import json
import random

import pytest

from uce_lab.exactlin import QQ
from uce_lab.superdialg import (
    DialgebraFormatError,
    InvalidInputError,
    NotABimoduleMapError,
    NotADifferentialError,
    SuperDialgebra,
    bracket_ideal,
    bracket_span,
    builtin_dialgebra,
    catalog_names,
    dump_dialgebra,
    from_algebra,
    from_bimodule_map,
    from_dga,
    load_dialgebra,
    load_dialgebra_file,
    matrix_dialgebra,
    quotient_Dm,
    tensor_product,
    validate,
)

UNITAL = [n for n in catalog_names() if builtin_dialgebra(n).is_unital]


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_is_valid(name):
    assert validate(builtin_dialgebra(name)) == []


def test_one_dim_rationals_is_valid():
    d = builtin_dialgebra("rationals")
    assert d.lmul([1], [1]) == [1]


def test_perturbed_left_constant_reports_mixed_axiom():
    d = builtin_dialgebra("rationals")
    broken = SuperDialgebra(d.ring, d.module, {(0, 0): [(0, 2)]}, d.right,
                            d.bar_unit, "broken")
    issues = validate(broken)
    assert any("mixed-axiom" in v for v in issues)


def test_bar_duplex_is_valid_with_two_bar_units():
    d = builtin_dialgebra("bar_duplex_q")
    assert validate(d) == []
    # both basis vectors satisfy the bar-unit laws (checked by hand: the
    # products are x <| y = x s(y) and x |> y = s(x) y with s = coordinate sum)
    assert validate(d.with_bar_unit([0, 1])) == []


def test_validate_flags_odd_bar_unit():
    g = builtin_dialgebra("grassmann_q")
    broken = SuperDialgebra(g.ring, g.module, g.left, g.right, (0, 1), "odd-unit")
    assert any("even" in v for v in validate(broken))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def test_from_algebra_dual_numbers():
    d = builtin_dialgebra("dual_numbers_q")
    eps = [0, 1]
    assert d.lmul(eps, eps) == [0, 0]
    assert d.lmul([1, 0], eps) == eps


def test_from_algebra_rejects_nonassociative():
    bad = {(0, 0): [(1, 1)], (0, 1): [(0, 1)], (1, 0): [(0, 1)], (1, 1): [(1, 1)]}
    with pytest.raises(InvalidInputError):
        from_algebra(QQ, (0, 0), bad, (1, 0))


def test_from_dga_zero_differential_gives_zero_products():
    d = builtin_dialgebra("dual_dga_zero_q")
    assert d.left == {} and d.right == {}
    assert not d.is_unital


def test_from_dga_t3():
    # Q[t]/(t^3) with d(t) = t^2, products x <| y = x d(y)
    d = builtin_dialgebra("t3_dga_q")
    assert validate(d) == []
    one, t, t2 = [1, 0, 0], [0, 1, 0], [0, 0, 1]
    assert d.lmul(one, t) == t2          # 1 d(t) = t^2
    assert d.rmul(t, one) == t2          # d(t) 1 = t^2
    assert d.rmul(t, t) == [0, 0, 0]     # d(t) t = t^3 = 0
    assert d.lmul(t, t) == [0, 0, 0]     # t d(t) = t^3 = 0


def test_from_dga_rejects_non_differential():
    alg = builtin_dialgebra("dual_numbers_q")
    # d(eps) = 1 is not a derivation (d(eps^2) = 0 but 2 eps d(eps) = 2 eps)
    with pytest.raises(NotADifferentialError):
        from_dga(alg, [[0, 1], [0, 0]])


def test_from_bimodule_identity_recovers_algebra():
    alg = builtin_dialgebra("dual_numbers_q")
    la = {(i, j): [(k, c) for k, c in alg.left.get((i, j), [])]
          for i in range(2) for j in range(2) if alg.left.get((i, j))}
    fmat = [[1, 0], [0, 1]]
    d = from_bimodule_map(alg, la, la, fmat, (0, 0))
    assert d.left == alg.left and d.right == alg.right
    assert list(d.bar_unit) == [1, 0]


def test_bar_duplex_products_match_hand_evaluation():
    d = builtin_dialgebra("bar_duplex_q")
    u0, u1 = [1, 0], [0, 1]
    assert d.lmul(u1, u0) == u1     # (0,1) <| (1,0) = (0,1) f(1,0)
    assert d.rmul(u0, u1) == u1     # (1,0) |> (0,1) = f(1,0) (0,1)
    assert d.lmul(u0, u0) == u0
    assert d.rmul(u1, u1) == u1
    assert list(d.bar_unit) == [1, 0]


def test_from_bimodule_rejects_non_equivariant():
    alg = builtin_dialgebra("rationals")
    ra = {(0, 0): [(0, 1)], (1, 0): [(1, 1)]}
    # left action a.(x, y) = (ax, 0): f(a.m) = ax but a.f(m) = a(x + y)
    bad_la = {(0, 0): [(0, 1)]}
    with pytest.raises(NotABimoduleMapError):
        from_bimodule_map(alg, bad_la, ra, [[1, 1]], (0, 0))


def test_from_bimodule_flags_non_unital_action():
    # f(e) = 1 exists but the left action is not unital, so no bar-unit
    alg = builtin_dialgebra("rationals")
    ra = {(0, 0): [(0, 1)], (1, 0): [(1, 1)]}
    shifty_la = {(0, 0): [(1, 1)], (0, 1): [(1, 1)]}
    d = from_bimodule_map(alg, shifty_la, ra, [[1, 1]], (0, 0))
    assert not d.is_unital
    assert validate(d) == []


def test_tensor_product_with_unit_factor():
    q = builtin_dialgebra("rationals")
    bd = builtin_dialgebra("bar_duplex_q")
    t = tensor_product(q, bd)
    assert t.dim == 2
    assert t.left == bd.left and t.right == bd.right
    qq = tensor_product(q, q)
    assert qq.dim == 1 and qq.lmul([1], [1]) == [1]


def test_tensor_product_koszul_sign():
    g = builtin_dialgebra("grassmann_q")
    gg = tensor_product(g, g)
    assert validate(gg) == []
    x_tensor_1 = [0, 0, 1, 0]
    one_tensor_x = [0, 1, 0, 0]
    a = gg.lmul(x_tensor_1, one_tensor_x)
    b = gg.lmul(one_tensor_x, x_tensor_1)
    assert a == [-v for v in b] and any(v != 0 for v in a)


def test_matrix_dialgebra_units():
    md = matrix_dialgebra(2, builtin_dialgebra("rationals"))
    assert validate(md) == []
    e12, e21 = md.basis_vector(1), md.basis_vector(2)
    assert md.lmul(e12, e21) == [1, 0, 0, 0]   # E12 <| E21 = E11
    assert md.lmul(e12, e12) == [0, 0, 0, 0]
    one = matrix_dialgebra(1, builtin_dialgebra("dual_numbers_q"))
    assert one.left == builtin_dialgebra("dual_numbers_q").left


@pytest.mark.parametrize("name", ["rationals", "dual_numbers_q", "grassmann_q",
                                  "bar_duplex_q", "f2"])
def test_constructor_outputs_validate(name):
    assert validate(matrix_dialgebra(2, builtin_dialgebra(name))) == []


# ---------------------------------------------------------------------------
# bracket span / ideal / quotients
# ---------------------------------------------------------------------------


def test_bracket_ideal_commutative_is_zero():
    assert bracket_ideal(builtin_dialgebra("dual_numbers_q")).cols == 0
    assert bracket_ideal(builtin_dialgebra("rationals")).cols == 0


def test_bracket_ideal_bar_duplex_is_zero():
    # x <| y = x s(y) and y |> x = s(y) x coincide, so every bracket vanishes
    d = builtin_dialgebra("bar_duplex_q")
    assert d.bracket([1, 0], 0, [0, 1], 0) == [0, 0]
    assert bracket_ideal(d).cols == 0


def test_bracket_ideal_mat2_is_everything_but_span_is_trace_zero():
    d = builtin_dialgebra("mat2_q")
    # the two-sided ideal generated by the commutators of a simple algebra
    # is the whole algebra; the commutator span itself is trace zero
    assert bracket_ideal(d).cols == 4
    span = bracket_span(d)
    assert span.cols == 3
    for j in range(span.cols):
        col = span.column_dense(j)
        assert col[0] + col[3] == 0  # trace of a E11 + b E12 + c E21 + d E22


def test_quotient_dm_examples():
    assert quotient_Dm(builtin_dialgebra("rationals"), 2).invariants.is_zero()
    f2_q = quotient_Dm(builtin_dialgebra("f2"), 2).invariants
    assert f2_q.even_free_rank == 1 and f2_q.odd_free_rank == 0
    z_q = quotient_Dm(builtin_dialgebra("integers"), 2).invariants
    assert z_q.even_torsion == (2,)
    bd0 = quotient_Dm(builtin_dialgebra("bar_duplex_q"), 0).invariants
    assert bd0.even_free_rank == 2  # the bracket ideal vanishes
    g0 = quotient_Dm(builtin_dialgebra("grassmann_q"), 0).invariants
    assert (g0.even_free_rank, g0.odd_free_rank) == (1, 1)
    m0 = quotient_Dm(builtin_dialgebra("mat2_q"), 0).invariants
    assert m0.is_zero()


@pytest.mark.parametrize("name", UNITAL)
@pytest.mark.parametrize("m", [0, 2, 3])
def test_quotient_dm_annihilated_by_m(name, m):
    q = quotient_Dm(builtin_dialgebra(name), m)
    assert q.annihilated_by(m)


# ---------------------------------------------------------------------------
# structural identities of unital dialgebras (randomized homogeneous triples)
# ---------------------------------------------------------------------------


def _random_homogeneous(d, rng):
    par = rng.choice(sorted(set(d.module.parity)))
    vec = [0] * d.dim
    for i in range(d.dim):
        if d.parity(i) == par:
            vec[i] = rng.randint(-3, 3)
    if all(v == 0 for v in vec):
        idx = [i for i in range(d.dim) if d.parity(i) == par][0]
        vec[idx] = 1
    return [d.ring.normalize(v) for v in vec], par


@pytest.mark.parametrize("name", UNITAL)
def test_unital_bracket_identities(name):
    """a <| [b,c] = [a,b] <| c - (-1)^{|b||c|} [a <| c, b] <| 1
    [a,b] |> c = -(-1)^{|b||c|} a |> [c,b] + (-1)^{|b||c|} 1 |> [a |> c, b]
    [a,b] <| c = -(-1)^{|a||b|} b |> [a,c] + [a, b |> c]"""
    d = builtin_dialgebra(name)
    ring = d.ring
    one = list(d.bar_unit)
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(1000):
        a, pa = _random_homogeneous(d, rng)
        b, pb = _random_homogeneous(d, rng)
        c, pc = _random_homogeneous(d, rng)
        sbc = -ring.one if (pb * pc) % 2 else ring.one
        sab = -ring.one if (pa * pb) % 2 else ring.one

        lhs = d.lmul(a, d.bracket(b, pb, c, pc))
        t1 = d.lmul(d.bracket(a, pa, b, pb), c)
        t2 = d.lmul(d.bracket(d.lmul(a, c), (pa + pc) % 2, b, pb), one)
        rhs = [ring.normalize(x - sbc * y) for x, y in zip(t1, t2)]
        assert lhs == rhs

        lhs = d.rmul(d.bracket(a, pa, b, pb), c)
        t1 = d.rmul(a, d.bracket(c, pc, b, pb))
        t2 = d.rmul(one, d.bracket(d.rmul(a, c), (pa + pc) % 2, b, pb))
        rhs = [ring.normalize(-sbc * x + sbc * y) for x, y in zip(t1, t2)]
        assert lhs == rhs

        lhs = d.lmul(d.bracket(a, pa, b, pb), c)
        t1 = d.rmul(b, d.bracket(a, pa, c, pc))
        t2 = d.bracket(a, pa, d.rmul(b, c), (pb + pc) % 2)
        rhs = [ring.normalize(-sab * x + y) for x, y in zip(t1, t2)]
        assert lhs == rhs


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("name", catalog_names())
def test_file_round_trip(name, tmp_path):
    d = builtin_dialgebra(name)
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(dump_dialgebra(d)))
    d2 = load_dialgebra_file(path)
    assert d2.left == d.left and d2.right == d.right
    assert d2.module.parity == d.module.parity
    assert (d2.bar_unit is None) == (d.bar_unit is None)
    assert validate(d2) == []


def test_load_rejects_bad_index():
    blob = dump_dialgebra(builtin_dialgebra("rationals"))
    blob["left"] = [[0, 0, 5, "1"]]
    with pytest.raises(DialgebraFormatError) as err:
        load_dialgebra(blob, source="mem")
    assert "mem:left[0]" in str(err.value)


def test_load_rejects_bad_coefficient():
    blob = dump_dialgebra(builtin_dialgebra("integers"))
    blob["left"] = [[0, 0, 0, "1/2"]]
    with pytest.raises(DialgebraFormatError):
        load_dialgebra(blob)


def test_load_rejects_bad_parity():
    blob = dump_dialgebra(builtin_dialgebra("rationals"))
    blob["parity"] = [2]
    with pytest.raises(DialgebraFormatError) as err:
        load_dialgebra(blob, source="mem")
    assert "parity" in str(err.value)


def test_load_rejects_malformed_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{broken")
    with pytest.raises(DialgebraFormatError) as err:
        load_dialgebra_file(p)
    assert str(p) in str(err.value)
