"""Smoke tests for the python bindings: one happy path per operation group."""

import os

import pytest

import rloop

DATA = os.environ.get("RLOOP_DATA", "tests/data")

Z6 = """
grouptab 1
6
0 1 2 3 4 5
0 1 2 3 4 5
1 2 3 4 5 0
2 3 4 5 0 1
3 4 5 0 1 2
4 5 0 1 2 3
5 0 1 2 3 4
"""


def load(name):
    return rloop.read_looptab_file(os.path.join(DATA, name))


def test_parse_and_validate():
    file = rloop.parse_looptab(Z6)
    assert file.table.order == 6
    report = rloop.validate(file.table, file.identity, rloop.TableKind.group)
    assert report.valid
    assert rloop.looptab_string(file.table, 0, rloop.FileKind.grouptab).startswith(
        "grouptab 1\n6\n"
    )


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        rloop.parse_looptab("looptab 1\n2\ne e\ne e\ne e\n")


def test_divisions_and_translations():
    loop = rloop.RightLoopTable(rloop.parse_looptab(Z6).table, 0)
    assert loop.right_divide(5, 2) == 3
    assert loop.left_divide(2, 1) == 5
    assert loop.right_translation(2).images() == [2, 3, 4, 5, 0, 1]
    assert loop.left_translation(0).bijective


def test_twist_and_identities():
    loop = rloop.RightLoopTable(rloop.parse_looptab(Z6).table, 0)
    eta = rloop.Permutation([0, 5, 4, 3, 2, 1])
    spec = rloop.TwistSpec([2], eta)
    twisted = rloop.twist(loop, spec)
    assert twisted.op(3, 2) == 5  # 2 - 3 mod 6
    assert rloop.translation_identities(loop, spec, twisted) == []
    report = rloop.check_property(twisted, rloop.LoopProperty.commutative)
    assert not report.holds


def test_nrt_pipeline():
    group_file = load("s3.grouptab")
    group = rloop.FiniteGroup.from_table(group_file.table, group_file.identity)
    a = group.table.index_of("a")
    subgroup = rloop.subgroup_closure(group, [a])
    enumerator = rloop.NrtEnumerator(group, subgroup)
    assert enumerator.total == 4
    transversals = list(enumerator)
    assert len(transversals) == 4
    for t in transversals:
        induced = rloop.induced_operation(group, subgroup, t)
        assert rloop.validate(induced.table, 0, rloop.TableKind.right_loop).valid
        data = rloop.c_groupoid(group, subgroup, t)
        assert rloop.theta_action_check(group, data)
    text = rloop.cgroupoid_string(group, rloop.c_groupoid(group, subgroup, transversals[0]))
    assert text.startswith("f:\n")


def test_zb_and_dinf():
    loop = rloop.ZBLoop([1, 5, -3])
    assert loop.op(4, 5) == 1
    assert loop.right_divide(5, 2) == 3  # 2 not in B
    big = 10**40
    assert loop.op(big, 5) == 5 - big
    report = rloop.isomorphism_check(loop, 25)
    assert report["ok"]
    assert report["pairs_checked"] == 51 * 51

    x = rloop.DinfElement(True, 0)
    y = rloop.DinfElement(False, 1)
    assert rloop.dinf_product(x, x) == rloop.DinfElement(False, 0)
    assert rloop.dinf_product(rloop.dinf_product(x, y), x) == rloop.DinfElement(False, -1)
    assert rloop.transversal_op(rloop.ZBLoop([2]), 3, 2) == -1


def test_affine_support():
    refl = rloop.AffineMap.reflection(4)
    assert rloop.affine_support(refl).tag == "all-but-one"
    assert rloop.affine_support(refl).fixed_point == 2
    assert rloop.affine_support(rloop.AffineMap.identity()).tag == "empty"
    assert (refl * refl).is_identity()
    huge = rloop.AffineMap.translation(10**30)
    assert huge.apply(1) == 10**30 + 1


def test_alpha_and_lemma1():
    steiner = load("steiner10.looptab")
    table = rloop.RightLoopTable(steiner.table, steiner.identity)
    ok, failing, double_failing = rloop.lemma1_check(table)
    assert ok and failing == [] and double_failing == []

    eta = rloop.Permutation.identity(10)
    assert rloop.alpha_identity_check(table, 1, 2, eta) == []
    alpha = rloop.build_alpha(table, 1, 2, eta)
    assert rloop.support(alpha.realized).moved_count <= 10


def test_witness_search():
    z5 = load("z5.grouptab")
    table = rloop.RightLoopTable(z5.table, z5.identity)
    gens = [table.right_translation(a) for a in range(5)]
    hits = rloop.witness_search(gens, 4, 5)
    assert len(hits) == 4  # the four nontrivial translations
    assert all(h.moved.moved_count == 5 for h in hits)

    zb = rloop.ZBLoop([2])
    affine_gens = [zb.right_translation(k) for k in range(-5, 6)]
    assert rloop.witness_search_affine(affine_gens, 8, 10**6) == []
    closure = rloop.affine_word_closure(affine_gens, 8)
    assert all(
        rloop.affine_support(m).tag != "empty" for m in closure if not m.is_identity()
    )


def test_mulgroup():
    z6 = load("z6.grouptab")
    table = rloop.RightLoopTable(z6.table, z6.identity)
    result = rloop.right_mult_group(table, 1000)
    assert result.closed and result.order == 6


def test_homogeneity_and_left_division():
    z6 = load("z6.grouptab")
    table = rloop.RightLoopTable(z6.table, z6.identity)
    hom = rloop.homogeneity_map(table, 2, 5)
    assert hom.images[2] == 5 and hom.bijective

    eta = rloop.Permutation([0, 5, 4, 3, 2, 1])
    twisted = rloop.twist(table, rloop.TwistSpec([2], eta))
    assert not twisted.left_translation(1).bijective
    with pytest.raises(ValueError):
        twisted.left_divide(1, 0)


def test_alpha_word_letters():
    z5 = load("z5.grouptab")
    table = rloop.RightLoopTable(z5.table, z5.identity)
    alpha = rloop.build_alpha(table, 1, 2, rloop.Permutation.identity(5))
    # applied first to last: (1/a)^-1, b, (1/a)^-1, b with 1/a = 4, b = 2
    assert alpha.word.letters == [(4, -1), (2, 1), (4, -1), (2, 1)]
