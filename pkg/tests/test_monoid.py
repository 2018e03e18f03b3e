from itertools import product

import pytest

from globalize.fixtures import fixtures
from globalize.monoid import (BadIdentity, BadIndex, NotAssociative, NotNormal, SubgroupSpec,
                              alternating_subgroup, bicyclic_truncated, cyclic, direct_product,
                              inverses, is_group, parse_monoid_spec, quotient_group, semilattice2,
                              symmetric, transformation_monoid, validate_monoid)
from globalize.schema import SchemaError, parse_monoid


def associative(M):
    return all(M.mul(M.mul(a, b), c) == M.mul(a, M.mul(b, c)) for a, b, c in product(range(len(M)), repeat=3))


@pytest.mark.parametrize("M", [cyclic(1), cyclic(4), symmetric(3), semilattice2(), bicyclic_truncated(2),
                               direct_product(cyclic(2), semilattice2())])
def test_builders_give_monoids(M):
    assert associative(M)
    e = M.identity
    assert all(M.mul(e, a) == a == M.mul(a, e) for a in range(len(M)))


def test_sizes():
    assert len(symmetric(3)) == 6
    assert len(direct_product(cyclic(2), cyclic(3))) == 6
    assert len(parse_monoid_spec("product:cyclic:2*sym:3")) == 12


def test_groups_and_inverses():
    assert is_group(symmetric(3))[0]
    assert not is_group(semilattice2())[0]
    inv = inverses(cyclic(5))
    assert all(cyclic(5).mul(a, inv[a]) == 0 for a in range(5))


def test_bicyclic_truncation_is_not_a_group():
    B = bicyclic_truncated(2)
    assert not is_group(B)[0]
    assert len(B) >= 3


def test_non_associative_table_is_named():
    with pytest.raises(NotAssociative) as exc:
        parse_monoid(fixtures("monoid-nonassoc"))
    assert exc.value.witness == ("a", "a", "b")


def test_identity_and_index_errors():
    with pytest.raises(BadIdentity):
        validate_monoid(["e", "a"], [[0, 0], [1, 1]], 0)
    with pytest.raises(BadIndex):
        validate_monoid(["e", "a"], [[0, 1], [1, 2]], 0)
    with pytest.raises(SchemaError):
        parse_monoid({"elements": ["e"], "identity": "e", "table": {}})


def test_quotients():
    S3 = symmetric(3)
    q = quotient_group(S3, alternating_subgroup(S3))
    assert len(q.group) == 2 and len(q.representatives) == 2
    assert all(q.projection[S3.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b])
               for a in range(6) for b in range(6))
    transposition = SubgroupSpec.from_labels(S3, ["123", "213"])
    with pytest.raises(NotNormal):
        quotient_group(S3, transposition)


def test_transformation_monoid_closure():
    M = transformation_monoid(2, [[0, 0]])
    assert len(M) == 2 and not is_group(M)[0]
