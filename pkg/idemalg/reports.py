"""Machine readable run reports shared by the library suites and the command line."""
from contextlib import contextmanager
from dataclasses import dataclass, field
import json
import logging
from pathlib import Path
import time
from typing import Any, Dict, Iterator, List, Optional

log = logging.getLogger(__name__)


def canonical_json(value: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: Optional[str] = None

    def as_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.residual is not None:
            data["residual"] = self.residual
        return data


@dataclass
class RunReport:
    """What a command was asked, what it computed and which checks it ran.

    ``timing`` holds wall clock seconds per step and is left out of the deterministic output unless
    asked for.
    """

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str, passed: bool, residual: Optional[str] = None) -> bool:
        self.checks.append(CheckResult(name, bool(passed), residual))
        if not passed:
            log.warning("Check failed: %s %s", name, residual or "")
        return bool(passed)

    @contextmanager
    def timed(self, step: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timing[step] = self.timing.get(step, 0.0) + time.perf_counter() - start

    def summary(self) -> Dict[str, int]:
        passed = sum(c.passed for c in self.checks)
        return {"passed": passed, "failed": len(self.checks) - passed, "total": len(self.checks)}

    def as_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [c.as_dict() for c in self.checks],
            "summary": self.summary(),
            "passed": self.passed,
        }
        if include_timing:
            data["timing"] = {step: round(seconds, 6) for step, seconds in self.timing.items()}
        return data

    def to_json(self, pretty: bool = False, include_timing: bool = False) -> str:
        return canonical_json(self.as_dict(include_timing), pretty)

    def write(self, directory: str) -> Path:
        """Write the full report, timing included, to ``<directory>/<command>.json``."""
        path = Path(directory)
        path.mkdir(parents=True, exist_ok=True)
        target = path / f"{self.command}.json"
        target.write_text(self.to_json(pretty=True, include_timing=True) + "\n", encoding="utf-8")
        log.debug("Report written to %s.", target)
        return target
