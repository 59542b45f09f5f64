import itertools

import pytest
from hypothesis import given, settings, strategies as st

from higher_buildings.chains import (
    PATTERNS,
    ChainType,
    ClassificationError,
    _seg,
    adjacent,
    classify_chain,
    compatible,
    enumerate_intermediate,
    maximal_chain_through,
    maximal_chains_through,
    modules_include,
    neighbor_candidates,
    segment_from_classes,
    simplices_from_chain,
)
from higher_buildings.gamma import full, partial, principal
from higher_buildings.grammar import format_components, parse_components
from higher_buildings.lattices import act_translate, normalize, parse_lattice, vertex_type

from helpers import compatible_oracle, matches_template, saturated, template


def comps(text, dim=None):
    return tuple(parse_components(text, dim)[0])


def ideal(dim):
    if dim == 1:
        return st.one_of(st.integers(-2, 2).map(principal), st.just(full(1)))
    return st.one_of(
        st.tuples(st.integers(-2, 2), st.integers(-2, 2)).map(lambda g: principal(*g)),
        st.integers(-2, 2).map(partial),
        st.just(full(2)),
    )


@st.composite
def lattice(draw, m=None, dim=None, vertex=False):
    m = m or draw(st.sampled_from([2, 3]))
    dim = dim or draw(st.sampled_from([1, 2]))
    cs = draw(st.lists(ideal(dim), min_size=m, max_size=m).filter(lambda c: not all(x.is_full for x in c)))
    L = normalize(cs, dim)
    if vertex and not vertex_type(L).is_vertex:
        L = normalize([principal((0,) * dim)] + cs[1:], dim)
        if not vertex_type(L).is_vertex:
            L = normalize([principal((0,) * dim)] * m, dim)
    return L


@st.composite
def lattice_pair(draw):
    m = draw(st.sampled_from([2, 3]))
    dim = draw(st.sampled_from([1, 2]))
    return draw(lattice(m, dim)), draw(lattice(m, dim))


# --- compatibility -----------------------------------------------------------


@settings(max_examples=250, deadline=None)
@given(lattice_pair())
def test_compatible_matches_monomial_scan(pair):
    X, Y = pair
    assert compatible(X, Y) == compatible_oracle(X, Y)


def test_compatible_examples():
    assert compatible(parse_lattice("<O|O|O>"), parse_lattice("<M|O|O>"))
    assert not compatible(parse_lattice("<O|O|O>"), parse_lattice("<O|K|K>"))
    assert compatible(parse_lattice("<O|O|Oc>"), parse_lattice("<Mc|Mc|O>"))
    with pytest.raises(ValueError):
        compatible(parse_lattice("<O|O>"), parse_lattice("<O|O|O>"))


def test_adjacent_examples():
    for i, j in itertools.product(range(-2, 3), repeat=2):
        X = normalize([principal(0), principal(i), principal(j)], 1)
        Y = normalize([principal(0), principal(i), principal(j + 1)], 1)
        assert adjacent(X, Y)
    L = parse_lattice("<O1|F>")
    assert adjacent(L, L)
    assert not adjacent(parse_lattice("<O|O|O>"), parse_lattice("<O|K|K>"))
    with pytest.raises(ValueError):
        adjacent(parse_lattice("<Oc|Oc|Oc>"), parse_lattice("<O|O|O>"))


@settings(max_examples=200, deadline=None)
@given(lattice_pair(), st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=3, max_size=3))
def test_adjacent_symmetric_and_translation_invariant(pair, tau):
    X, Y = pair
    if not (vertex_type(X).is_vertex and vertex_type(Y).is_vertex):
        return
    assert adjacent(X, X)
    assert adjacent(X, Y) == adjacent(Y, X)
    t = [g[: X.dim] if X.dim == 2 else g[1] for g in tau[: X.m]]
    assert adjacent(X, Y) == adjacent(act_translate(X, t), act_translate(Y, t))


@pytest.mark.parametrize("text", ["<O|O|O>", "<O|Oc|Oc>", "<O1|O1|O1>", "<O|O|Oc>", "<O|K>"])
def test_neighbour_candidates_cover_compatible_classes(text):
    # every vertex compatible with L in a box of classes is among the candidates
    L = parse_lattice(text)
    dim, m = L.dim, L.m
    pool = [principal(g) for g in itertools.product(range(-2, 3), repeat=dim)]
    if dim == 2:
        pool += [partial(j) for j in range(-2, 3)]
    pool.append(full(dim))
    cands = neighbor_candidates(L) | {L}
    for cs in itertools.product(pool, repeat=m - 1):
        Y = normalize((principal((0,) * dim),) + cs, dim)
        if vertex_type(Y).is_vertex and compatible(L, Y):
            assert Y in cands, Y


# --- intermediate modules ------------------------------------------------------


def test_enumerate_intermediate_examples():
    hi, lo = comps("<O|O>"), comps("<M|M>")
    got = {format_components(x) for x in enumerate_intermediate(hi, lo, window=1)}
    assert got == {"<O|O>", "<M|O>", "<O|M>", "<M|M>"}
    assert enumerate_intermediate(hi, hi, window=3) == [hi]
    with pytest.raises(ValueError):
        enumerate_intermediate(lo, hi)


def test_enumerate_intermediate_recovers_partial_block():
    # between Oc+Oc and Oc+Mc the modules are Oc + P(i,0) and the two ends
    got = enumerate_intermediate(comps("<Oc|Oc>"), comps("<Oc|Mc>"), window=3)
    got = sorted(got, key=lambda r: -sum(modules_include(r, s) for s in got))
    strings = [format_components(r) for r in got]
    assert strings[0] == "<Oc|Oc>" and strings[-1] == "<Oc|Mc>"
    mid = strings[1:-1]
    assert mid == [f"<Oc|{format_components([principal(i, 0)])[1:-1]}>" for i in range(-3, 4)]
    assert "<Oc|M>" in mid and "<Oc|P(2,0)>" in mid


# --- canonical chains ------------------------------------------------------------


@pytest.mark.parametrize("text,tag,want", [
    ("<O|O|O>", "P2-i", "<O|O|O> <M|O|O> <M|M|O> <M|M|M>"),
    ("<O|K|K>", "P2-v", "<O|K|K> <M|K|K>"),
    ("<O1|O1|F>", "P1-ii", "<O1|O1|F> <m^1|O1|F> <m^1|m^1|F>"),
    ("<O1|F|F>", "P1-iii", "<O1|F|F> <m^1|F|F>"),
    ("<O|O|Oc>", "P2-ii",
     "<Oc|Oc|Oc> <O|O|Oc> <M|O|Oc> <M|M|Oc> <Mc|Mc|Oc> <Mc|Mc|O> <Mc|Mc|M> <Mc|Mc|Mc>"),
])
def test_canonical_segments_verbatim(text, tag, want):
    got_tag, seg = maximal_chain_through(parse_lattice(text))
    assert str(got_tag) == tag
    assert " ".join(seg.to_strings()) == want


def test_canonical_periods():
    assert str(maximal_chain_through(parse_lattice("<O|O|O>"))[1].period) == "(1,0)"
    assert str(maximal_chain_through(parse_lattice("<O|Oc|Oc>"))[1].period) == "(0,1)"
    assert str(maximal_chain_through(parse_lattice("<O1|O1|O1>"))[1].period) == "1"


def test_inserted_modules_are_marked():
    _, seg = maximal_chain_through(parse_lattice("<O|O|Oc>"))
    inserted = [s for s, mk in zip(seg.to_strings(), seg.markers) if mk == "inserted"]
    assert inserted == ["<Oc|Oc|Oc>", "<Mc|Mc|Oc>", "<Mc|Mc|Mc>"]
    assert set(seg.links) == {"step", "limit"}


def test_insertable_class_gets_chains():
    chains = maximal_chains_through(parse_lattice("<Oc|Oc|Oc>"))
    assert chains and all(normalize(s.reps[0], 2) == parse_lattice("<Oc|Oc|Oc>") for _, s in chains)
    with pytest.raises(ValueError):
        maximal_chain_through(parse_lattice("<O|Oc|K>"))


@pytest.mark.parametrize("text,count", [
    ("<O|O|O>", 6), ("<O1|O1|O1>", 6), ("<O|O|Oc>", 2), ("<O|Oc|Oc>", 2),
    ("<O|O|K>", 2), ("<O|K|K>", 1), ("<O1|O1|F>", 2), ("<O1|F|F>", 1),
    ("<O|O>", 2), ("<O|Oc>", 1), ("<O|K>", 1), ("<O1|O1>", 2), ("<O1|F>", 1),
])
def test_orientation_counts(text, count):
    assert len(maximal_chains_through(parse_lattice(text))) == count


@pytest.mark.parametrize("text", ["<O|O|O>", "<O|O|Oc>", "<O|Oc|Oc>", "<O|O|K>", "<O|K|K>",
                                  "<O1|O1|O1>", "<O1|O1|F>", "<O1|F|F>", "<O|O>", "<O|Oc>",
                                  "<O|K>", "<O1|O1>", "<O1|F>"])
def test_chains_match_templates_and_saturate(text):
    for tag, seg in maximal_chains_through(parse_lattice(text)):
        assert classify_chain(seg, require_maximal=True) == tag
        assert matches_template(seg, str(tag))
        assert saturated(seg)


def test_template_check_rejects_wrong_order():
    tag, seg = maximal_chain_through(parse_lattice("<O|O|O>"))
    assert not matches_template(seg, "P2-iv")
    reps, marks = template("P2-i", 2)
    assert not matches_template(_seg(reps[::-1], marks, (1, 0), 2), "P2-i")


# --- classification --------------------------------------------------------------


def test_classify_examples():
    for text, tag in (("<O|O|Oc>", "P2-ii"), ("<O|Oc|Oc>", "P2-iii"), ("<O1|F|F>", "P1-iii")):
        _, seg = maximal_chain_through(parse_lattice(text))
        assert str(classify_chain(seg)) == tag


def _raw_segment(texts, period, dim):
    reps = [comps(t, dim) for t in texts]
    marks = ["member" if vertex_type(normalize(r, dim)).is_vertex else "inserted" for r in reps]
    return _seg(reps, marks, period, dim)


def test_classify_errors():
    with pytest.raises(ClassificationError):  # not decreasing
        classify_chain(_raw_segment(["<M|O|O>", "<O|O|O>", "<M|M|M>"], (1, 0), 2))
    with pytest.raises(ClassificationError):  # does not close up
        classify_chain(_raw_segment(["<O|O|O>", "<M|O|O>"], (0, 1), 2))
    with pytest.raises(ClassificationError):  # non-vertex, non-insertable member
        classify_chain(_raw_segment(["<O|Oc|K>", "<M|Oc|K>", "<Mc|Mc|K>"], (0, 1), 2))
    with pytest.raises(ClassificationError):  # incompatible classes
        classify_chain(_raw_segment(["<O|O|O>", "<M|O|K>", "<M|M|M>"], (1, 0), 2))
    with pytest.raises(ClassificationError):  # a face only
        classify_chain(_raw_segment(["<O|O|O>", "<M|M|M>"], (1, 0), 2), require_maximal=True)


def test_every_tag_has_one_pattern():
    for tag, (config, codes) in PATTERNS.items():
        others = [t for t, (c, cs) in PATTERNS.items() if c == config and sorted(cs) == sorted(codes)]
        assert others == [tag]


# --- simplices ---------------------------------------------------------------------


@pytest.mark.parametrize("text,dim", [
    ("<O|O|O>", 2), ("<O|O|Oc>", 2), ("<O|Oc|Oc>", 2), ("<O|O|K>", 1), ("<O|K|K>", 0),
    ("<O1|O1|O1>", 2), ("<O1|O1|F>", 1), ("<O1|F|F>", 0),
    ("<O|O>", 1), ("<O|Oc>", 1), ("<O|K>", 0), ("<O1|O1>", 1), ("<O1|F>", 0),
])
def test_simplex_dimension_by_type(text, dim):
    tag, seg = maximal_chain_through(parse_lattice(text))
    (s,) = simplices_from_chain(tag, seg)
    assert s.dim == dim
    assert all(vertex_type(v).is_vertex for v in s.vertices)


def test_simplex_examples():
    tag, seg = maximal_chain_through(parse_lattice("<O|O|O>"))
    (s,) = simplices_from_chain(tag, seg)
    assert {str(v) for v in s.vertices} == {"<O|O|O>", "<O|P(-1,0)|P(-1,0)>", "<O|O|P(-1,0)>"}
    assert s.vertices == {parse_lattice(t) for t in ("<O|O|O>", "<M|O|O>", "<M|M|O>")}
    tag, seg = maximal_chain_through(parse_lattice("<O1|O1|F>"))
    (s,) = simplices_from_chain(tag, seg)
    assert s.vertices == {parse_lattice("<O1|O1|F>"), parse_lattice("<m^1|O1|F>")}
    with pytest.raises(ValueError):
        simplices_from_chain(ChainType.P2_I, maximal_chain_through(parse_lattice("<O|K|K>"))[1])


# --- segments from classes ------------------------------------------------------------


def test_segment_from_classes():
    classes = [parse_lattice(t) for t in ("<O|O|O>", "<M|M|O>", "<M|O|O>")]
    seg = segment_from_classes(classes)
    assert classify_chain(seg, require_maximal=True) == ChainType.P2_I
    classes = [parse_lattice(t) for t in ("<O|O|Oc>", "<Mc|Mc|O>", "<M|O|Oc>")]
    seg = segment_from_classes(classes)
    assert classify_chain(seg, require_maximal=True) == ChainType.P2_II
    with pytest.raises(ValueError):
        segment_from_classes([parse_lattice("<O|O|O>"), parse_lattice("<O|K|K>")])


def test_segment_json():
    _, seg = maximal_chain_through(parse_lattice("<O|O|O>"))
    d = seg.to_dict()
    assert d["reps"][0] == "<O|O|O>" and d["period"] == "(1,0)"
    assert d["markers"] == ["member"] * 4 and d["links"] == ["step"] * 3
