"""
app.explorer
------------

Schedule exploration, atomicity checking and the assertion language.
"""

from .search import (
    ExploreBounds, ExplorationResult, TerminalStore, FailureRecord, explore
)
from .atomicity import check_atomicity, check_program, AtomicityReport
from .oracle import schedule_count_oracle
from .predicate import Predicate, parse_predicate, parse_bindings
