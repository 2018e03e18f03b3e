import pytest

from globalize.fintop import all_topologies, discrete, indiscrete, is_open_embedding, validate_topology
from globalize.fixtures import fixtures
from globalize.monoid import cyclic, semilattice2
from globalize.schema import parse_global_action, parse_top_action
from globalize.setact import GlobalAction
from globalize.topact import (ActionNotContinuous, TopActionError, TopMonoid, check_epsilon_open_embedding,
                              check_kappa_identity, enumerate_top_modules, globalize_top,
                              induce_from_global_top, initial_domain_topology,
                              is_topological_partial_action, require_top_module,
                              subspace_domain_topology, tpa_remarks, verify_top_module)


def load(name):
    return parse_top_action(fixtures(name))


def test_counter_is_not_globalizable():
    m = load("counter")
    assert verify_top_module(m).ok
    assert not is_topological_partial_action(m)
    res = globalize_top(m)
    assert not res.globalizable
    assert res.witness == {"open": [["a", "e"]], "in": "tD", "not_in": "initial"}


def test_counter_remarks_hold_yet_not_tpa():
    # every X_m is open and every alpha_m is continuous, but pi is not an open embedding
    assert tpa_remarks(load("counter")) == {"e": (True, True)}


def test_sierpinski_tpa():
    m = load("sierpinski")
    assert verify_top_module(m).ok and is_topological_partial_action(m)
    res = globalize_top(m)
    assert res.globalizable
    assert check_epsilon_open_embedding(m, res)
    assert check_kappa_identity(m, res).ok
    assert len(res.set_result.Y) == 3


def test_finite_ggpm_globalizes_without_open_embedding():
    obj = fixtures("finite-ggpm")
    m = parse_top_action(obj)
    res = globalize_top(m)
    assert res.globalizable
    assert not is_topological_partial_action(m)
    assert not check_epsilon_open_embedding(m, res)
    # the globalization reproduces the ambient 4-point space up to relabelling
    big = parse_global_action(obj["global"], "global", m.base.M)
    assert len(res.set_result.Y) == len(big)


def test_swap_rho_is_rejected_with_named_error():
    m = load("swap-rho")
    v = verify_top_module(m)
    assert not v.ok and v.name == "rho continuous" and v.witness == {"open": ["a"]}
    with pytest.raises(ActionNotContinuous) as exc:
        require_top_module(m)
    assert exc.value.which == "rho" and exc.value.witness == {"open": ["a"]}


def test_subspace_domain_topology_is_initial_for_subspace_inputs():
    m = load("sierpinski")
    assert m.tD == subspace_domain_topology(m.base, m.tX, m.tM.topology)
    assert m.tD == initial_domain_topology(m)


def test_restriction_along_open_subset_is_tpa():
    M = cyclic(2)
    Y = GlobalAction(M, ("p", "q", "r"), ((0, 1), (1, 0), (2, 2)))
    # g swaps p and q, so {p, r} open forces {q, r} open
    tY = validate_topology(3, [[], [2], [0, 2], [1, 2], [0, 1, 2]])
    tM = TopMonoid(M, discrete(2))
    m = induce_from_global_top(Y, tY, tM, [0, 2])
    assert (0, 1) not in m.base.domain
    assert is_open_embedding([0, 2], m.tX, tY)
    assert is_topological_partial_action(m)


def test_discontinuous_global_action_is_named():
    M = cyclic(2)
    Y = GlobalAction(M, ("p", "q"), ((0, 1), (1, 0)))
    tY = validate_topology(2, [[], [0], [0, 1]])
    with pytest.raises(ActionNotContinuous):
        induce_from_global_top(Y, tY, TopMonoid(M, discrete(2)), [0])


def test_topological_monoid_checks():
    with pytest.raises(TopActionError):
        # inversion on Z/3 is not continuous for the "0 then 1" chain
        TopMonoid(cyclic(3), validate_topology(3, [[], [0], [0, 1], [0, 1, 2]]))
    assert TopMonoid(semilattice2(), indiscrete(2))


def test_small_enumeration_criteria():
    # the full sweep lives in the acceptance suite; this is the 2-point slice
    seen = 0
    for m in enumerate_top_modules(max_x=2, max_m=2):
        res = globalize_top(m)
        assert res.globalizable == (m.tD == initial_domain_topology(m))
        if res.globalizable:
            assert check_epsilon_open_embedding(m, res) == is_topological_partial_action(m)
        seen += 1
    assert seen > 100


def test_every_topology_on_three_points_is_listed_once():
    assert len(set(all_topologies(3))) == 29
