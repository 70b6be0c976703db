from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Union

__all__ = ['Status', 'CheckResult', 'CheckRecord', 'Report', 'SCHEMA_VERSION']
log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class Status(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    SKIP = 'SKIP'


@dataclass
class CheckResult:
    """
    Outcome returned by a check function.

    ``witness`` holds the canonical text of a certificate (on PASS) or counterexample (on FAIL).
    """

    status: Status
    message: str = ''
    witness: Optional[str] = None
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def of(cls, ok: bool, message: str = '', witness: Optional[str] = None, **details: Any) -> CheckResult:
        return cls(Status.PASS if ok else Status.FAIL, message, witness, details)


@dataclass
class CheckRecord:
    name: str
    status: Status
    message: str = ''
    witness: Optional[str] = None
    details: dict[str, Any] = field(default_factory=dict)
    time: float = 0.0

    def to_json(self) -> dict[str, Any]:
        data = asdict(self)
        data['status'] = self.status.value
        data['details'] = _jsonable(self.details)
        return data

    def __str__(self) -> str:
        text = f'[{self.status.value}] {self.name}'
        if self.message:
            text += f': {self.message}'
        if self.witness:
            text += f'\n    {self.witness}'
        return text


@dataclass
class Report:
    """Aggregate of the records of one suite run, serialized as a single schema-versioned JSON document."""

    suite: str
    version: str
    config: dict[str, Any]
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def status(self) -> Status:
        if any(r.status is Status.FAIL for r in self.records):
            return Status.FAIL
        if any(r.status is Status.PASS for r in self.records):
            return Status.PASS
        return Status.SKIP

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def counts(self) -> dict[str, int]:
        return {s.value: sum(r.status is s for r in self.records) for s in Status}

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        records = [r.to_json() for r in self.records]
        if not timing:
            for r in records:
                r.pop('time')
        return {
            'schema': SCHEMA_VERSION,
            'tool': 'dahalab',
            'version': self.version,
            'suite': self.suite,
            'config': _jsonable(self.config),
            'status': self.status.value,
            'counts': self.counts(),
            'records': records,
        }

    def digest(self) -> str:
        """Hash of the report content without timing fields."""
        text = json.dumps(self.to_json(timing=False), sort_keys=True)
        return hashlib.sha256(text.encode()).hexdigest()

    def write(self, path: Union[Path, str]) -> None:
        path = Path(path)
        if not path.parent.exists():
            log.info('Creating report folder "%s"', path.parent)
            path.parent.mkdir(parents=True)
        path.write_text(json.dumps(self.to_json(), indent=2, sort_keys=True) + '\n')

    @classmethod
    def read(cls, path: Union[Path, str]) -> Report:
        data = json.loads(Path(path).read_text())
        if data.get('schema') != SCHEMA_VERSION:
            raise ValueError(f'Report "{path}" has schema {data.get("schema")}, expected {SCHEMA_VERSION}')
        records = [CheckRecord(r['name'], Status(r['status']), r['message'], r['witness'], r['details'], r.get('time', 0.0)) for r in data['records']]
        return cls(data['suite'], data['version'], data['config'], records)

    def text(self) -> str:
        lines = [f'dahalab {self.version} | {self.suite}']
        lines.extend(str(r) for r in self.records)
        counts = ', '.join(f'{k} {v}' for k, v in self.counts().items())
        lines.append(f'{self.status.value} ({counts})')
        return '\n'.join(lines)


def _jsonable(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    return str(value)
