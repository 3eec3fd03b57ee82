"""Collects one PASS/FAIL line per acceptance criterion."""
from contextlib import contextmanager
import time

LINES: list[str] = []


@contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        LINES.append(f"[FAIL] criterion {number}: {title} ({type(exc).__name__}: {exc})")
        raise
    LINES.append(f"[PASS] criterion {number}: {title} ({time.perf_counter() - start:.2f} s)")
