from __future__ import annotations

import os

from hypothesis import HealthCheck, settings, strategies as st

from walled_brauer.words import Context

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=2000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def contexts(draw, max_r: int = 3, max_s: int = 3) -> Context:
    return Context(draw(st.integers(1, max_r)), draw(st.integers(1, max_s)))


@st.composite
def words_in(draw, ctx: Context, max_len: int = 20) -> tuple[int, ...]:
    return tuple(draw(st.lists(st.integers(1, ctx.max_gen), max_size=max_len)))


@st.composite
def context_and_word(draw, max_r: int = 3, max_s: int = 3, max_len: int = 20):
    ctx = draw(contexts(max_r, max_s))
    return ctx, draw(words_in(ctx, max_len))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
