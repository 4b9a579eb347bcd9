"""
app.explorer.oracle
-------------------

Closed-form schedule count for straight-line threads, used to cross-check
the explorer.
"""

from math import factorial, prod


def schedule_count_oracle(step_counts):
    """
    Number of interleavings of straight-line threads.

    Args:
        step_counts (Sequence[int]): Scheduling units of each thread.

    Returns:
        int: The multinomial coefficient (Σk)! / Π(k!).
    """
    return factorial(sum(step_counts)) // prod(factorial(k) for k in step_counts)
