"""Per-criterion bookkeeping for the acceptance suite."""
from __future__ import annotations

from contextlib import contextmanager

RESULTS: dict[int, tuple[str, bool]] = {}


class Checker:
    """Collects every failed check so one run reports all of them."""

    def __init__(self):
        self.failures: list[str] = []
        self.passed = 0

    def check(self, cond, msg: str):
        if cond:
            self.passed += 1
        else:
            self.failures.append(msg)

    def finish(self):
        assert not self.failures, f"{len(self.failures)} failed check(s):\n  " + "\n  ".join(self.failures[:20])


@contextmanager
def criterion(num: int, label: str):
    ck = Checker()
    try:
        yield ck
        ck.finish()
    except BaseException:
        RESULTS[num] = (label, False)
        print(f"criterion {num:2d}: FAIL  {label}")
        raise
    RESULTS[num] = (label, True)
    print(f"criterion {num:2d}: PASS  {label} ({ck.passed} checks)")
