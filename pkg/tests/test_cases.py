import pytest

from rrrgraph.cases import CaseClass, admissible_classes, choose_u0, classify, pendant_contexts
from rrrgraph.enumeration import unicyclic_graphs
from rrrgraph.errors import NoPendant, NotUnicyclic
from rrrgraph.families import build
from rrrgraph.graph import Graph, are_isomorphic


def test_choose_u0_starplus():
    ctx = choose_u0(build("starplus", 6))
    assert ctx.v0 == 0 and ctx.x == 5 and ctx.p == 3 and ctx.w_size == 2
    assert ctx.u0 in (3, 4, 5)


def test_choose_u0_cycle():
    with pytest.raises(NoPendant):
        choose_u0(build("cycle", 8))


def test_choose_u0_h7():
    g = build("h", 7)
    ctx = choose_u0(g)
    assert ctx.v0 == 4 and ctx.x == 3 and ctx.p == 2
    assert g.degree(ctx.u0) == 1 and ctx.u0 in g.neighbors(4)


def test_classify_examples():
    assert classify(build("hplus", 5)) is CaseClass.CASE2
    assert classify(build("h", 6)) is CaseClass.CASE3
    assert classify(build("cycle", 9)) is CaseClass.PURE_CYCLE


def test_classify_rejects_non_unicyclic():
    with pytest.raises(NotUnicyclic):
        classify(build("star", 5))


def test_base_case_uniqueness():
    c2 = [g for g in unicyclic_graphs(5) if classify(g) is CaseClass.CASE2]
    assert len(c2) == 1 and are_isomorphic(c2[0], build("hplus", 5))
    c3 = [g for g in unicyclic_graphs(6) if classify(g) is CaseClass.CASE3]
    assert len(c3) == 1 and are_isomorphic(c3[0], build("h", 6))


def test_partition_and_membership():
    for n in range(3, 13):
        for g in unicyclic_graphs(n):
            cls = classify(g)
            if cls is CaseClass.PURE_CYCLE:
                assert are_isomorphic(g, build("cycle", n))
                continue
            ctx = choose_u0(g)
            deg = g.degrees()
            non_pendant = [w for w in g.neighbors(ctx.v0) if deg[w] != 1]
            if cls is CaseClass.CASE2:
                assert len(non_pendant) == 1 and deg[non_pendant[0]] in (3, 4)
            elif cls is CaseClass.CASE3:
                assert len(non_pendant) == 1 and deg[non_pendant[0]] == 2
            else:
                assert len(non_pendant) >= 2 or deg[non_pendant[0]] >= 5


def test_selection_rule():
    for g in unicyclic_graphs(9):
        ctxs = pendant_contexts(g)
        if not ctxs:
            continue
        ctx = choose_u0(g)
        assert ctx.w_size == max(c.w_size for c in ctxs)
        assert ctx.x == min(c.x for c in ctxs if c.w_size == ctx.w_size)


def test_classification_is_label_invariant():
    import random

    from rrrgraph.graph import relabel

    rng = random.Random(4)
    for g in unicyclic_graphs(10):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert classify(relabel(g, perm)) is classify(g)


def test_tie_break_ambiguity_exists():
    # triangle with a pendant path of length 2 at one vertex and length 3 at another:
    # both leaves have |W| = 0 and x = 2, yet they fall into different cases
    g = Graph(8, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (1, 5), (5, 6), (6, 7)])
    assert admissible_classes(g) == {CaseClass.CASE2, CaseClass.CASE3}
    assert classify(g) is CaseClass.CASE2
