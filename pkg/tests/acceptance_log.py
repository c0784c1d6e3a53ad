"""Collects one result line per acceptance criterion for the terminal summary."""

RESULTS: dict[int, str] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    RESULTS[criterion] = f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}"


def lines() -> list[str]:
    return [RESULTS[k] for k in sorted(RESULTS)]
