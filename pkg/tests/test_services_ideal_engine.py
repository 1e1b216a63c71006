import random

import pytest

from app.services.algebra_catalog import algebra_catalog
from app.services.generators import parse_generators
from app.services.ideal_engine import ideal_service
from app.services.linalg import enumerate_subspaces, in_span, rref
from app.services.rendering import format_set, format_trace


def _run(L, text):
    gens = parse_generators(L, text)
    result = ideal_service.ideal_generated(L, [g.element for g in gens])
    return result, format_trace(result, [g.text for g in gens], L.char)


def _is_ideal(L, rows):
    basis = L.basis_elements()
    for row in rows:
        e = L.element(row)
        for x in basis:
            if not in_span(L.bracket(e, x).coords, rows):
                return False
    return True


# -----------------------------------------------------------------------------
# Ejecuciones de referencia en gl2
# -----------------------------------------------------------------------------

@pytest.mark.parametrize(
    "char, gens, golden",
    [
        (2, "x2", "gl2_char2_x2.txt"),
        (2, "x1", "gl2_char2_x1.txt"),
        (2, "x1, x2", "gl2_char2_x1_x2.txt"),
        (3, "x3, x3 - x1", "gl2_char3_x3_x3_minus_x1.txt"),
        (3, "x2", "gl2_char3_x2.txt"),
    ],
)
def test_reference_runs(char, gens, golden, golden_dir):
    L = algebra_catalog.resolve("gl2", char)
    _, lines = _run(L, gens)
    expected = (golden_dir / golden).read_text(encoding="utf-8").splitlines()
    assert lines == expected


def test_reference_run_dimensions(gl2_char3):
    result, _ = _run(gl2_char3, "x2")
    assert [entry.dimension for entry in result.trace] == [1, 2, 3, 3]
    assert result.dimension == 3


def test_char0_ideal_of_x2(gl2_char0):
    result, lines = _run(gl2_char0, "x2")
    assert format_set(result.basis) == "{x1 - x4, x2, x3}"
    assert lines[-1] == "Ideal <{x2}> = {x1 - x4, x2, x3} with dimension = 3 and char(K)=0"


# -----------------------------------------------------------------------------
# Casos borde
# -----------------------------------------------------------------------------

def test_zero_generator(gl2_char2):
    result = ideal_service.ideal_generated(gl2_char2, [gl2_char2.zero()])
    assert result.dimension == 0
    assert len(result.trace) == 1
    assert result.trace[0].depth == 0


def test_empty_generator_list(gl2_char3):
    result = ideal_service.ideal_generated(gl2_char3, [])
    assert result.dimension == 0
    assert len(result.trace) == 1


def test_full_span_at_depth_zero(gl2_char3):
    result = ideal_service.ideal_generated(gl2_char3, gl2_char3.basis_elements())
    assert result.dimension == 4
    assert len(result.trace) == 1


def test_central_generator_stops_after_one_round(gl2_char0):
    result, lines = _run(gl2_char0, "x1 + x4")
    assert result.dimension == 1
    assert lines[:2] == ["Depth = 0 -> {x1 + x4}", "Depth = 1 -> {x1 + x4}"]


# -----------------------------------------------------------------------------
# Invariantes
# -----------------------------------------------------------------------------

@pytest.mark.parametrize("name, char", [("gl2", 2), ("gl2", 3), ("sl2", 3), ("gl3", 2), ("ut3", 3)])
def test_closure_and_trace_invariants(name, char):
    L = algebra_catalog.resolve(name, char)
    rng = random.Random(f"{name}-{char}")
    for _ in range(40):
        gens = [L.element([rng.randrange(char) for _ in range(L.dimension)]) for _ in range(rng.randint(1, 2))]
        result = ideal_service.ideal_generated(L, gens)
        rows = result.rows()
        assert rref(rows) == rows
        assert _is_ideal(L, rows)
        for g in gens:
            assert ideal_service.ideal_contains(result, g)
        dims = [entry.dimension for entry in result.trace]
        assert dims == sorted(dims)
        assert len(result.trace) <= L.dimension + 1
        assert result.trace[-1].spanning_set == result.basis


def test_generator_order_and_redundancy_do_not_matter(gl2_char3):
    a = gl2_char3.element([1, 2, 0, 0])
    b = gl2_char3.element([0, 0, 1, 1])
    base = ideal_service.ideal_generated(gl2_char3, [a, b]).basis
    assert ideal_service.ideal_generated(gl2_char3, [b, a]).basis == base
    assert ideal_service.ideal_generated(gl2_char3, [a, b, a + b, gl2_char3.zero()]).basis == base
    assert ideal_service.ideal_generated(gl2_char3, [a.scale(2), b]).basis == base


@pytest.mark.parametrize("name, char", [("gl2", 3), ("gl3", 2), ("sl2", 5)])
def test_rref_and_scaling_of_generators_do_not_matter(name, char):
    L = algebra_catalog.resolve(name, char)
    rng = random.Random(f"invariance-{name}-{char}")
    for _ in range(70):
        gens = [L.element([rng.randrange(char) for _ in range(L.dimension)]) for _ in range(rng.randint(1, 3))]
        base = ideal_service.ideal_generated(L, gens).basis
        reduced = [L.element(row) for row in rref([g.coords for g in gens])]
        assert ideal_service.ideal_generated(L, reduced).basis == base
        c = rng.randrange(1, char)
        assert ideal_service.ideal_generated(L, [g.scale(c) for g in gens]).basis == base


@pytest.mark.parametrize("name, char", [("gl2", 2), ("gl2", 3), ("sl2", 2), ("sl2", 3)])
def test_minimality_against_every_subspace(name, char):
    L = algebra_catalog.resolve(name, char)
    ideals = [space for space in enumerate_subspaces(L.dimension, L.characteristic) if _is_ideal(L, space)]
    for space in enumerate_subspaces(L.dimension, L.characteristic):
        if len(space) != 1:
            continue
        g = L.element(space[0])
        result = ideal_service.ideal_generated(L, [g])
        containing = [ideal for ideal in ideals if in_span(g.coords, ideal)]
        smallest = min(containing, key=len)
        assert result.rows() == smallest
        for ideal in containing:
            assert all(in_span(row, ideal) for row in result.rows())


# -----------------------------------------------------------------------------
# Centro, derivada y series
# -----------------------------------------------------------------------------

@pytest.mark.parametrize(
    "name, char, expected",
    [
        ("gl2", 0, "{x1 + x4}"),
        ("gl2", 2, "{x1 + x4}"),
        ("sl2", 2, "{x3}"),
        ("sl2", 3, "{}"),
        ("diag2", 5, "{x1, x2}"),
    ],
)
def test_center(name, char, expected):
    L = algebra_catalog.resolve(name, char)
    assert format_set(ideal_service.center(L)) == expected


def test_derived_subalgebra(gl2_char0, gl2_char2):
    assert format_set(ideal_service.derived_subalgebra(gl2_char0).basis) == "{x1 - x4, x2, x3}"
    assert format_set(ideal_service.derived_subalgebra(gl2_char2).basis) == "{x1 + x4, x2, x3}"


@pytest.mark.parametrize(
    "name, derived, lower, solvable, nilpotent",
    [
        ("ut2", [3, 1, 0], [3, 1], True, False),
        ("sut3", [3, 1, 0], [3, 1, 0], True, True),
        ("gl2", [4, 3], [4, 3], False, False),
        ("diag3", [3, 0], [3, 0], True, True),
    ],
)
def test_series(name, derived, lower, solvable, nilpotent):
    L = algebra_catalog.resolve(name, 0)
    assert ideal_service.derived_series(L).dimensions == derived
    assert ideal_service.lower_central_series(L).dimensions == lower
    assert ideal_service.is_solvable(L) is solvable
    assert ideal_service.is_nilpotent(L) is nilpotent


def test_series_max_terms():
    L = algebra_catalog.resolve("sut3", 0)
    assert ideal_service.derived_series(L, max_terms=2).dimensions == [3, 1]


@pytest.mark.parametrize("name, char", [("gl2", 0), ("gl3", 2), ("sl2", 2), ("ut3", 3), ("sut3", 5)])
def test_center_annihilates_basis(name, char):
    L = algebra_catalog.resolve(name, char)
    for z in ideal_service.center(L):
        for x in L.basis_elements():
            assert L.bracket(z, x).is_zero


def test_sl2_is_derived_subalgebra_of_gl2(gl2_char0):
    sl2 = algebra_catalog.resolve("sl2", 0)
    derived = ideal_service.derived_subalgebra(gl2_char0)
    assert derived.dimension == sl2.dimension
    for e in derived.basis:
        sl2.recognize(gl2_char0.realize(e))
