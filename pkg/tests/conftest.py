from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def positive_rationals(max_denominator: int = 50, max_value: int = 50):
    return st.fractions(min_value=Fraction(1, max_denominator), max_value=max_value,
                        max_denominator=max_denominator).filter(lambda q: q > 0)


def non_negative_rationals(max_denominator: int = 50, max_value: int = 50):
    return st.fractions(min_value=0, max_value=max_value, max_denominator=max_denominator)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}")
