"""Pass/fail result carried by every executable identity check."""

from dataclasses import dataclass

__all__ = ["Verdict"]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: ok, plus a counterexample witness and detail on failure."""

    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass" if not self.detail else f"pass\t{self.detail}"
        return f"fail\t{self.detail}" if self.detail else "fail"
