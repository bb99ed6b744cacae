from dataclasses import dataclass, field
from typing import List, Dict, Any
import datetime


@dataclass(slots=True)
class RunManifest:
    """Everything needed to re-run a command and reproduce its outputs."""
    command: str
    parameters: Dict[str, Any]
    seed: int
    artifact_version: str
    outputs: List[str] = field(default_factory=list)
    created_at: datetime.datetime = field(default_factory=lambda: datetime.datetime.now(datetime.timezone.utc))

    def __post_init__(self):
        """Ensuring that the creation time is a datetime instance."""
        if not isinstance(self.created_at, datetime.datetime):
            raise TypeError("created_at must be a datetime.datetime instance")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": 1,
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "artifact_version": self.artifact_version,
            "outputs": list(self.outputs),
            "created_at": self.created_at.isoformat(),
        }

    def __repr__(self) -> str:
        return (f"RunManifest(command={self.command}, seed={self.seed}, "
                f"outputs={len(self.outputs)}, created_at={self.created_at.isoformat()})")
