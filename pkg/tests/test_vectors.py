"""Vector layer: parsing, scalar products, antipodal neighbors."""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antipodal import (
    BadCharacter,
    DimensionMismatch,
    EmptyInput,
    InvalidParams,
    OverlapError,
    Params,
    RangeError,
    SignedVector,
    VectorFamily,
    antipodal_degree,
    antipodal_neighbors,
    cardinality_v,
    choose,
    enumerate_v,
    format_vector,
    is_antipodal,
    make_vector,
    parse_vector,
    scalar_product,
)
from _brute import antipodal_pair_counts, brute_vector_strings, gram

VALID_PARAMS = [
    (n, k, l)
    for n in range(2, 8)
    for k in range(1, n)
    for l in range(1, k + 1)
    if k + l <= n
]

params_st = st.sampled_from(VALID_PARAMS)


# ---------------------------------------------------------------- params

def test_params_accepts_valid():
    p = Params(4, 2, 1)
    assert (p.n, p.k, p.l) == (4, 2, 1)
    assert p.nontrivial_regime and p.circle_regime


@pytest.mark.parametrize("bad", [(4, 2, 0), (4, 1, 2), (3, 2, 2), (0, 1, 1), (2, 2, 1)])
def test_params_rejects_invalid(bad):
    with pytest.raises(InvalidParams):
        Params(*bad)


def test_regime_flags():
    assert not Params(3, 2, 1).nontrivial_regime  # n < 2k
    assert Params(5, 2, 1).circle_regime  # 4 <= 5 <= 5
    assert not Params(6, 2, 1).circle_regime  # 6 > 5
    assert not Params(9, 3, 1).circle_regime  # 9 > 8


# ---------------------------------------------------------------- parse/format

def test_parse_frozen():
    v = parse_vector("++-0")
    assert v.plus == frozenset({1, 2})
    assert v.minus == frozenset({3})
    assert v.n == 4
    assert format_vector(v) == "++-0"
    assert str(v) == "++-0"


def test_entry_lookup():
    v = parse_vector("+0-")
    assert [v.entry(i) for i in (1, 2, 3)] == [1, 0, -1]
    with pytest.raises(RangeError):
        v.entry(4)


def test_parse_errors():
    with pytest.raises(EmptyInput):
        parse_vector("")
    with pytest.raises(BadCharacter):
        parse_vector("+x-")


def test_make_vector_errors():
    with pytest.raises(OverlapError):
        SignedVector(4, frozenset({1, 2}), frozenset({2}))
    with pytest.raises(RangeError):
        make_vector(4, [1, 5], [2])
    with pytest.raises(RangeError):
        make_vector(4, [0, 1], [2])  # coordinates are 1-based


@given(params_st, st.data())
@settings(max_examples=60, deadline=None)
def test_parse_format_roundtrip(p, data):
    fam = enumerate_v(Params(*p))
    s = data.draw(st.sampled_from(fam.strings()))
    assert format_vector(parse_vector(s)) == s


# ---------------------------------------------------------------- products

def test_scalar_product_frozen():
    a = parse_vector("++-0")
    assert scalar_product(a, a) == 3
    assert scalar_product(a, parse_vector("-0++")) == -2
    assert scalar_product(a, parse_vector("0+-0")) == 2


def test_scalar_product_dimension_check():
    with pytest.raises(DimensionMismatch):
        scalar_product(parse_vector("+-"), parse_vector("+-0"))


@given(params_st, st.data())
@settings(max_examples=40, deadline=None)
def test_scalar_product_matches_numpy(p, data):
    strings = enumerate_v(Params(*p)).strings()
    i = data.draw(st.integers(0, len(strings) - 1))
    j = data.draw(st.integers(0, len(strings) - 1))
    g = gram([strings[i], strings[j]])
    assert scalar_product(parse_vector(strings[i]), parse_vector(strings[j])) == g[0, 1]
    assert g[0, 1] == g[1, 0]


# ---------------------------------------------------------------- antipodal pairs

def test_antipodal_frozen_partners():
    p = Params(4, 2, 1)
    v = parse_vector("++-0")
    partners = {s for s in enumerate_v(p).strings() if is_antipodal(v, parse_vector(s), p)}
    assert partners == {"-0++", "0-++"}
    assert {format_vector(w) for w in antipodal_neighbors(v, p)} == partners


def test_antipodal_frozen_partner_6_2_2():
    p = Params(6, 2, 2)
    v = parse_vector("++--00")
    nbrs = antipodal_neighbors(v, p)
    assert [format_vector(w) for w in nbrs] == ["--++00"]


def test_antipodal_neighbor_count_5_2_1():
    p = Params(5, 2, 1)
    assert len(antipodal_neighbors(parse_vector("++-00"), p)) == 4


def test_is_antipodal_requires_membership():
    p = Params(4, 2, 1)
    with pytest.raises(InvalidParams):
        is_antipodal(parse_vector("++00"), parse_vector("--00"), p)


@given(params_st, st.data())
@settings(max_examples=40, deadline=None)
def test_neighbors_complete_and_symmetric(p, data):
    park = Params(*p)
    fam = enumerate_v(park)
    v = data.draw(st.sampled_from(list(fam)))
    nbrs = set(antipodal_neighbors(v, park))
    scan = {w for w in fam if is_antipodal(v, w, park)}
    assert nbrs == scan
    assert v not in nbrs
    for w in nbrs:
        assert is_antipodal(w, v, park)


# ---------------------------------------------------------------- enumeration

def test_enumerate_frozen_smallest():
    assert enumerate_v(Params(2, 1, 1)).strings() == ("+-", "-+")


@pytest.mark.parametrize(
    "p,size", [((4, 2, 1), 12), ((5, 2, 1), 30), ((6, 2, 2), 90), ((2, 1, 1), 2)]
)
def test_enumerate_frozen_sizes(p, size):
    fam = enumerate_v(Params(*p))
    assert len(fam) == size == cardinality_v(Params(*p))


def test_enumerate_lex_order():
    strings = enumerate_v(Params(4, 2, 1)).strings()
    assert strings[0] == "++-0"
    assert strings == tuple(sorted(strings, key=lambda s: (sorted(i for i, c in enumerate(s) if c == "+"), sorted(i for i, c in enumerate(s) if c == "-"))))


@pytest.mark.parametrize("p", [(4, 2, 1), (5, 2, 2), (6, 3, 1), (3, 2, 1)])
def test_enumerate_matches_brute_scan(p):
    n, k, l = p
    assert sorted(enumerate_v(Params(n, k, l)).strings()) == sorted(
        brute_vector_strings(n, k, l)
    )


def test_cardinality_all_small_params():
    for n, k, l in VALID_PARAMS:
        assert cardinality_v(Params(n, k, l)) == comb(n, k) * comb(n - k, l)


# ---------------------------------------------------------------- degree formula

@pytest.mark.parametrize("p,deg", [((4, 2, 1), 2), ((5, 2, 1), 4), ((6, 2, 2), 1)])
def test_degree_frozen(p, deg):
    assert antipodal_degree(Params(*p)) == deg


def test_degree_matches_brute_everywhere_small():
    for n, k, l in VALID_PARAMS:
        if n > 6:
            continue
        counts = antipodal_pair_counts(brute_vector_strings(n, k, l), l)
        assert (counts == antipodal_degree(Params(n, k, l))).all()


def test_degree_second_exponent_is_k_minus_l():
    # The k-2l variant is wrong: it undercounts at (5,2,1) and at every
    # k = l instance (where validity forces n >= 2k, true degree 1, variant 0).
    def variant(n, k, l):
        return comb(k, l) * choose(n - k - l, k - 2 * l)

    assert variant(5, 2, 1) == 2
    assert antipodal_degree(Params(5, 2, 1)) == 4
    for n, k, l in VALID_PARAMS:
        if k == l:
            assert antipodal_degree(Params(n, k, l)) == 1
            assert variant(n, k, l) == 0


@given(params_st)
@settings(max_examples=30, deadline=None)
def test_degree_is_uniform(p):
    park = Params(*p)
    deg = antipodal_degree(park)
    for v in enumerate_v(park):
        assert len(antipodal_neighbors(v, park)) == deg


# ---------------------------------------------------------------- family container

def test_family_dedupes_preserving_order():
    p = Params(4, 2, 1)
    a, b = parse_vector("++-0"), parse_vector("++0-")
    fam = VectorFamily(p, [a, b, a])
    assert fam.strings() == ("++-0", "++0-")
    assert a in fam
    assert parse_vector("+0+-") not in fam


def test_family_rejects_nonconforming():
    p = Params(4, 2, 1)
    with pytest.raises(DimensionMismatch):
        VectorFamily(p, [parse_vector("++-00")])
    with pytest.raises(InvalidParams):
        VectorFamily(p, [parse_vector("+--0")])


def test_family_restrict():
    p = Params(4, 2, 1)
    fam = enumerate_v(p).restrict(lambda v: 1 in v.plus)
    assert len(fam) == 6
    assert all(1 in v.plus for v in fam)
