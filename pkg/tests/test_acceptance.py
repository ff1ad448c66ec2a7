"""Acceptance battery: one test per criterion, printing one pass/fail line
each.  Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines,
or ``treescale verify --suite all`` for the CLI equivalent.
"""

import pytest

from treescale.acceptance import CHECKS


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_criterion(name):
    result = CHECKS[name]()
    print(result.line())
    assert result.passed, result.line()


def test_every_criterion_is_registered():
    assert len(CHECKS) == 13
    assert sorted(CHECKS) == [f"c{i:02d}_{suffix}" for i, suffix in enumerate([
        "two_transitive_spectrum", "at_most_p_colours",
        "two_block_even_exponents", "many_blocks_skip_one",
        "mixed_blocks_full", "symmetric_p_part_lattice",
        "coprime_yet_locally_scaled", "oracle_agreement",
        "localised_sandwich", "modular_p_parts", "aggregate_divisibility",
        "sylow_hall_battery", "spectrum_exponent_inclusion"], start=1)]
