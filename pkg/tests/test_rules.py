"""
test_rules.py
-------------
Rule conformance: one fixture program per reduction rule. Each run's trace
must contain the rule tag and the final store must equal the hand-derived
store exactly.
"""

import pytest

from app.engine import EngineConfig, Granularity, Rule, Mode, RunStatus, run

FINE = Granularity.FINE
LITERAL = Granularity.LITERAL


@pytest.mark.parametrize("name,granularity,rule,store", [
    ("r01_unfold.cpar", FINE, Rule.R1, "{x=1}"),
    ("r01_unfold.cpar", FINE, Rule.R3, "{x=1}"),
    ("r02_arguments.cpar", FINE, Rule.R2, "{x=4}"),
    ("r03_first_match.cpar", FINE, Rule.R3, "{x=1}"),
    ("r04_true.cpar", FINE, Rule.R4, "{}"),
    ("r05_empty_pool.cpar", FINE, Rule.R5, "{x=1}"),
    ("r06_assign.cpar", FINE, Rule.R6, "{x=6}"),
    ("r07_empty_seq.cpar", FINE, Rule.R7, "{}"),
    ("r07_empty_seq.cpar", LITERAL, Rule.R7, "{}"),
    ("r08_seq.cpar", LITERAL, Rule.R8, "{x=1, y=2}"),
    ("r10_empty_block.cpar", FINE, Rule.R10, "{}"),
    ("r11_block.cpar", FINE, Rule.R11, "{N=1, list[1]=tom}"),
    ("r11_block.cpar", LITERAL, Rule.R11, "{N=1, list[1]=tom}"),
])
def test_rule_fixture(program, name, granularity, rule, store):
    """The rule fires and the run ends in the hand-derived store."""
    outcome = run(EngineConfig(granularity=granularity),
                  program(f"rules/{name}"))
    assert outcome.status is RunStatus.SUCCESS
    assert rule in {event.rule for event in outcome.trace}
    assert outcome.final_store.canonical() == store


@pytest.mark.parametrize("granularity", list(Granularity))
def test_rule_repeat(program, granularity):
    """Rule 9 loops until the step bound."""
    outcome = run(EngineConfig(granularity=granularity, max_steps=20),
                  program("rules/r09_repeat.cpar"))
    assert outcome.status is RunStatus.STEP_LIMIT
    assert Rule.R9 in {event.rule for event in outcome.trace}
    assert outcome.final_store.canonical() == "{x=1}"


def test_rule_call_event_order(program):
    """A call unit emits R3, R2 then R1."""
    outcome = run(EngineConfig(), program("rules/r02_arguments.cpar"))
    rules = [event.rule for event in outcome.trace]
    assert rules == [Rule.R3, Rule.R2, Rule.R1, Rule.R6]
    assert outcome.trace[2].statement == "x = 4"


def test_rule_true_alone_is_concurrent_r4(program):
    """`true` alone in the pool is a success under rule 4."""
    outcome = run(EngineConfig(), program("rules/r04_true.cpar"))
    assert [(e.rule, e.mode) for e in outcome.trace] == [
        (Rule.R4, Mode.CONCURRENT)
    ]


def test_rule_empty_pool_closes_sequential_run(program):
    """A block's sequential run closes with an empty pool event."""
    outcome = run(EngineConfig(), program("rules/r05_empty_pool.cpar"))
    assert [(e.rule, e.mode) for e in outcome.trace] == [
        (Rule.R11, Mode.CONCURRENT),
        (Rule.R6, Mode.SEQUENTIAL),
        (Rule.R5, Mode.SEQUENTIAL),
    ]
    assert outcome.trace[-1].statement == "||()"


def test_rule_empty_block_has_no_body_events(program):
    """An empty block is one R10 event."""
    outcome = run(EngineConfig(), program("rules/r10_empty_block.cpar"))
    assert [e.rule for e in outcome.trace] == [Rule.R10]


def test_rule_empty_seq_is_settled_without_a_unit(program):
    """`;()` is discharged at start; no scheduling unit is consumed."""
    outcome = run(EngineConfig(), program("rules/r07_empty_seq.cpar"))
    assert outcome.schedule == ()
    assert [e.rule for e in outcome.trace] == [Rule.R7]


def test_rule_seq_literal_trace(program):
    """Rule 8 runs each element of `;` alone, in sequential mode."""
    outcome = run(EngineConfig(granularity=LITERAL),
                  program("rules/r08_seq.cpar"))
    assert outcome.schedule == (0, 0)
    assert [(e.rule, e.mode) for e in outcome.trace] == [
        (Rule.R8, Mode.CONCURRENT),
        (Rule.R6, Mode.SEQUENTIAL),
        (Rule.R5, Mode.SEQUENTIAL),
        (Rule.R8, Mode.CONCURRENT),
        (Rule.R6, Mode.SEQUENTIAL),
        (Rule.R5, Mode.SEQUENTIAL),
        (Rule.R7, Mode.CONCURRENT),
    ]


def test_rule_seq_fine_trace(program):
    """Fine granularity decomposes `;` and runs each assignment as a unit."""
    outcome = run(EngineConfig(granularity=FINE),
                  program("rules/r08_seq.cpar"))
    assert outcome.final_store.canonical() == "{x=1, y=2}"
    assert [e.rule for e in outcome.trace] == [
        Rule.SEQ_DECOMPOSE, Rule.R6, Rule.SEQ_DECOMPOSE, Rule.R6, Rule.R7
    ]
