import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symcolor.autgroup import enumerate_automorphisms
from symcolor.corpus import all_connected_graphs, connected_graphs
from symcolor.errors import ParameterUndefined, PreconditionError, ResourceLimitError
from symcolor.graph import from_edge_list
from symcolor.solvers import Parameter, check_witness, compute_parameter, oracle_parameter, replay_certificate

P = Parameter


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return from_edge_list(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


@pytest.mark.parametrize("g,p,value", [
    (cycle(5), P.CHI_ODD, 5),
    (cycle(5), P.CHI, 3),
    (cycle(4), P.CHI_D, 4),
    (cycle(4), P.CHI, 2),
    (complete(4), P.CHI, 4),
    (complete(4), P.CHI_PRIME, 3),
    (complete(4), P.CHI_TOTAL, 5),
    (cycle(4), P.D, 3),
    (from_edge_list(3, [(0, 1), (1, 2)]), P.D, 2),
    (from_edge_list(2, [(0, 1)]), P.CHI_TOTAL, 3),
])
def test_known_values(g, p, value):
    r = compute_parameter(g, p)
    assert r.value == value
    assert check_witness(g, p, r.witness)


@pytest.mark.parametrize("p", [P.D_PRIME, P.CHI_PRIME_D, P.CHI_PRIME_N])
def test_k2_edge_parameters_undefined(p):
    with pytest.raises(ParameterUndefined):
        compute_parameter(from_edge_list(2, [(0, 1)]), p)


def test_k1_edge_parameters_are_zero():
    k1 = from_edge_list(1, [])
    assert compute_parameter(k1, P.CHI_PRIME).value == 0
    assert compute_parameter(k1, P.CHI).value == 1


def test_distinguishing_needs_connected():
    with pytest.raises(PreconditionError):
        compute_parameter(from_edge_list(4, [(0, 1), (2, 3)]), P.D)


def test_budget_exhaustion_reports_last_refuted():
    with pytest.raises(ResourceLimitError) as info:
        compute_parameter(complete(6), P.CHI_TOTAL_D, budget=50)
    assert info.value.last_refuted is None or info.value.last_refuted >= 1


def test_certificates_replay():
    for g in all_connected_graphs(4):
        for p in Parameter:
            try:
                r = compute_parameter(g, p)
            except ParameterUndefined:
                continue
            assert replay_certificate(g, r)


def test_oracle_agrees_order_le_4_all_tags():
    for g in all_connected_graphs(4):
        for p in Parameter:
            try:
                mine = compute_parameter(g, p).value
            except ParameterUndefined:
                with pytest.raises(ParameterUndefined):
                    oracle_parameter(g, p)
                continue
            assert mine == oracle_parameter(g, p).value, (g.edges, p)


def test_oracle_agrees_random_order_6_sample():
    rng = random.Random(3)
    done = 0
    while done < 15:
        g = from_edge_list(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if rng.random() < 0.5])
        if not g.is_connected():
            continue
        done += 1
        for p in (P.CHI, P.CHI_ODD, P.CHI_D, P.D_PRIME, P.CHI_N):
            try:
                assert compute_parameter(g, p).value == oracle_parameter(g, p).value
            except ParameterUndefined:
                pass


# -- monotonicity chain ------------------------------------------------------------

def value(g, p, auts):
    try:
        return compute_parameter(g, p, auts=auts).value
    except ParameterUndefined:
        return None


CHAIN = [
    (P.CHI, P.CHI_D), (P.D, P.CHI_D), (P.CHI, P.CHI_ODD), (P.CHI, P.CHI_N),
    (P.CHI_PRIME, P.CHI_PRIME_D), (P.D_PRIME, P.CHI_PRIME_D), (P.CHI_PRIME, P.CHI_PRIME_N),
    (P.CHI_TOTAL, P.CHI_TOTAL_D), (P.D_TOTAL, P.CHI_TOTAL_D), (P.CHI, P.CHI_TOTAL),
    (P.CHI_PRIME, P.CHI_TOTAL), (P.D_TOTAL, P.D),
]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(all_connected_graphs(5, 2)))
def test_monotonicity_chain(g):
    auts = enumerate_automorphisms(g)
    vals = {p: value(g, p, auts) for p in Parameter}
    for lo, hi in CHAIN:
        if vals[lo] is not None and vals[hi] is not None:
            assert vals[lo] <= vals[hi], (lo, hi)
    assert vals[P.CHI_TOTAL_D] <= vals[P.CHI_TOTAL] + 1
    assert vals[P.CHI_D] <= vals[P.CHI] + vals[P.D]


def test_proper_distinguishing_of_paths():
    for n in range(2, 7):
        g = from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
        assert compute_parameter(g, P.CHI_D).value == (2 if n % 2 == 0 else 3)


def test_k6_needs_six():
    g = connected_graphs(6)[-1]  # most edges sorts last
    assert compute_parameter(g, P.CHI_D).value == 6
