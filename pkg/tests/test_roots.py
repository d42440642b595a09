from collections import Counter
from fractions import Fraction

import pytest

from core.exceptions import PreconditionError, RootBasisError
from core.family_constants import ROOT_TABLE_SPECS, SUPERIDENTITY_SPECS
from core.root_tables import root_table
from core.roots import find_root_identification, match_root_table, root_decompose, root_service, verify_theorem2
from core.superalgebra import EVEN, ODD
from schemas.family import parse_spec_string

BASIC_SPECS = [text for text in SUPERIDENTITY_SPECS if parse_spec_string(text).is_basic]


def test_sl2_roots(sl2_algebra):
    rd = root_decompose(sl2_algebra, [0])
    assert [root.functional for root in rd.roots] == [(Fraction(-2),), (Fraction(2),)]
    assert all(root.dim == 1 for root in rd.roots)
    assert verify_theorem2(sl2_algebra, rd) == []


def test_wrong_cartan_is_rejected(sl2_algebra):
    with pytest.raises(RootBasisError, match="basis is not a root basis"):
        root_decompose(sl2_algebra, [1])
    with pytest.raises(PreconditionError):
        root_decompose(sl2_algebra, [3])


@pytest.mark.parametrize("text", BASIC_SPECS)
def test_decomposition_covers_the_algebra(build, text):
    entry = build(text)
    rd = root_decompose(entry.algebra, entry.cartan)
    assert sum(root.dim for root in rd.roots) + rd.zero_space.dim == entry.algebra.dim
    functionals = rd.functionals
    for (functional, parity), count in functionals.items():
        negative = tuple(-value for value in functional)
        assert functionals[(negative, parity)] == count


@pytest.mark.parametrize("text", BASIC_SPECS)
def test_root_space_checks_pass_on_basic_instances(build, text):
    entry = build(text)
    rd, violations = root_service.decompose(entry.algebra, entry.cartan)
    assert violations == []


def test_b11_root_counts(build):
    entry = build("B:1,1")
    rd = root_decompose(entry.algebra, entry.cartan)
    parities = Counter(root.parity for root in rd.roots)
    assert parities == {EVEN: 4, ODD: 6}


def test_a10_odd_roots_pair_up(build):
    entry = build("A:1,0")
    rd = root_decompose(entry.algebra, entry.cartan)
    odd = [root for root in rd.roots if root.parity == ODD]
    assert len(odd) == 4
    labels = {entry.algebra.labels[root.indices[0]] for root in odd}
    assert labels == {"g_{e1-d1}", "g_{-e1+d1}", "g_{e2-d1}", "g_{-e2+d1}"}


@pytest.mark.parametrize("text", ROOT_TABLE_SPECS)
def test_root_tables_match(build, text):
    entry = build(text)
    rd = root_decompose(entry.algebra, entry.cartan)
    assert match_root_table(rd, entry.spec)


def test_d21_matches_its_table(build):
    entry = build("D21:2")
    rd = root_decompose(entry.algebra, entry.cartan)
    assert find_root_identification(rd, root_table(entry.spec)) is not None


def test_mislabeled_family_does_not_match(build):
    b11 = build("B:1,1")
    rd = root_decompose(b11.algebra, b11.cartan)
    assert not match_root_table(rd, parse_spec_string("C:2"))
    a10 = build("A:1,0")
    assert not match_root_table(root_decompose(a10.algebra, a10.cartan), parse_spec_string("B:0,1"))


def test_periplectic_is_reported_not_raised(build):
    entry = build("P:2")
    rd, violations = root_service.decompose(entry.algebra, entry.cartan)
    assert sum(root.dim for root in rd.roots) + rd.zero_space.dim == entry.algebra.dim
    assert violations


def test_non_basic_families_have_no_table():
    assert root_table(parse_spec_string("Q:2")) is None
    assert root_table(parse_spec_string("P:2")) is None
    assert root_table(parse_spec_string("Aqq:1")) is None
