"""Weighted-graph enumeration against the rewriting oracle."""

from fractions import Fraction

import pytest

from normord.graphs import (
    BuildingBlock,
    CoeffTable,
    blocks_from,
    enumerate_graphs,
    explicit_graphs,
    explicit_table,
)
from normord.stirling import gen_bell_number
from normord.weyl import NormalForm, laguerre_derivative_nf


@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("M", [1, 2])
def test_enumeration_matches_oracle(r, M):
    d = laguerre_derivative_nf(r, M)
    power = NormalForm.one()
    for n in range(1, 5):
        power = power * d
        table = enumerate_graphs(d, n)
        assert table.to_normal_form() == power, (r, M, n)
        assert table.total_weight == power.expectation_at_one()
        assert table.total_weight == gen_bell_number(r, M, n)


def test_frozen_totals():
    d11 = laguerre_derivative_nf(1, 1)
    assert [enumerate_graphs(d11, n).total_weight for n in (1, 2, 3, 4)] == [
        2, 7, 34, 209,
    ]
    d21 = laguerre_derivative_nf(2, 1)
    assert [enumerate_graphs(d21, n).total_weight for n in (1, 2, 3, 4)] == [
        3, 16, 121, 1179,
    ]


def test_pure_annihilator_has_no_attachments():
    a = NormalForm.annihilator()
    for n in range(1, 5):
        table = enumerate_graphs(a, n)
        assert table.as_dict() == {(0, n): 1}


def test_blocks_from_normal_form():
    d = laguerre_derivative_nf(1, 1)  # ad a^2 + a
    blocks = blocks_from(d)
    assert sorted((b.out_lines, b.in_lines, b.weight) for b in blocks) == [
        (0, 1, 1),
        (1, 2, 1),
    ]


def test_explicit_graphs_agree_with_counting():
    d = laguerre_derivative_nf(1, 1)
    for n in (1, 2, 3):
        graphs = explicit_graphs(d, n)
        table = enumerate_graphs(d, n)
        assert explicit_table(d, n).as_dict() == table.as_dict()
        # every block weight is 1 here, so each labeled diagram counts
        # once and the number of diagrams is the total weight
        assert len(graphs) == table.total_weight


def test_explicit_graphs_limit():
    d = laguerre_derivative_nf(1, 1)
    with pytest.raises(ValueError):
        explicit_graphs(d, 4)


def test_coeff_table_round_trip():
    d = laguerre_derivative_nf(2, 2)
    table = enumerate_graphs(d, 3)
    again = CoeffTable.from_dict(table.n, table.as_dict())
    assert again.as_dict() == table.as_dict()
    assert again.to_normal_form() == table.to_normal_form()


def test_building_block_fields():
    b = BuildingBlock(1, 2, Fraction(3))
    assert (b.out_lines, b.in_lines, b.weight) == (1, 2, 3)
