"""Pytest configuration: a deterministic, deadline-free hypothesis profile.

Exact arithmetic makes example run times vary wildly with the drawn sizes,
so the per-example deadline is disabled; derandomization keeps CI stable.
"""

from hypothesis import settings

settings.register_profile("exact", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("exact")
