import pytest

from xbannaito import bi_eigenvalue, build_seed
from xbannaito.darboux import transformed_operator
from xbannaito.errors import DuplicateSeed
from xbannaito.exact import RatFunc
from xbannaito.multistep import (build_chain, chain_eigenfunction, chain_intertwining,
                                 check_determinant, determinant_eigenfunction, printed_gamma,
                                 start_chain, step_conditions)


def test_start_is_classical(P):
    s = start_chain(P)
    assert s.step == 0
    assert not any(step_conditions(s.steps[0]).values())


def test_one_step_matches_single_transform(P):
    s = build_chain([2], P)
    assert s.top == transformed_operator(build_seed((1, 2), P))


@pytest.mark.parametrize("seeds", [(1, 3), (2, 3, 5)])
def test_zero_exactly_at_seeds(P, seeds):
    s = build_chain(seeds, P)
    for m in range(9):
        assert chain_eigenfunction(s, m).is_zero() == (m in seeds)


@pytest.mark.parametrize("seeds", [(1, 3), (2, 3, 5), (4, 1)])
def test_eigen_equation_and_determinant(params, seeds):
    s = build_chain(seeds, params)
    for m in range(9):
        f = chain_eigenfunction(s, m)
        assert (s.top.apply(f) - bi_eigenvalue(m, params) * f).is_zero()
        assert check_determinant(s, m) == f


def test_chain_intertwining_two_steps(P):
    assert chain_intertwining(build_chain([1, 3], P))


def test_duplicate_seed(P):
    with pytest.raises(DuplicateSeed):
        build_chain([2, 2], P)


def test_determinant_needs_two_steps(P):
    with pytest.raises(ValueError):
        determinant_eigenfunction(build_chain([1], P), 3)


def test_printed_gamma_holds_only_at_first_step(P):
    s = build_chain([1, 3], P)
    assert printed_gamma(s, 1) == s.steps[1].c
    assert printed_gamma(s, 2) != s.steps[2].c
