"""Room, transmitter, and photodetector geometry.

All lengths are in meters, angles in radians, powers in watts. The default
values describe the reference scenario used throughout: an empty 5 x 5 x 3 m
room with reflectance-0.8 surfaces, an upward-facing 10 mW infrared LED
carried at 0.85 m height, and up to four downward-facing ceiling
photodetectors.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import SceneConfigError

#: Propagation speed used for all path delays (m/s).
SPEED_OF_LIGHT = 2.998e8

#: Ceiling photodetector positions of the reference scenario, in deployment order.
DEFAULT_PD_POSITIONS = (
    (1.5, 1.5, 3.0),
    (3.5, 1.5, 3.0),
    (1.5, 3.5, 3.0),
    (3.5, 3.5, 3.0),
)


def _vec3(value, name: str) -> tuple[float, float, float]:
    arr = np.asarray(value, dtype=float)
    if arr.shape != (3,):
        raise SceneConfigError(f"{name} must be a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise SceneConfigError(f"{name} must be finite")
    return (float(arr[0]), float(arr[1]), float(arr[2]))


def _unit3(value, name: str) -> tuple[float, float, float]:
    v = np.asarray(_vec3(value, name))
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise SceneConfigError(f"{name} must be a nonzero vector")
    v = v / norm
    return (float(v[0]), float(v[1]), float(v[2]))


@dataclass(frozen=True)
class Photodetector:
    """A ceiling-mounted uplink receiver."""

    position: tuple[float, float, float]
    area: float = 1e-4
    fov_half_angle: float = math.radians(70.0)
    orientation: tuple[float, float, float] = (0.0, 0.0, -1.0)

    def __post_init__(self):
        object.__setattr__(self, "position", _vec3(self.position, "photodetector position"))
        object.__setattr__(self, "orientation", _unit3(self.orientation, "photodetector orientation"))
        if not self.area > 0.0:
            raise SceneConfigError("photodetector area must be > 0")
        if not 0.0 < self.fov_half_angle <= math.pi / 2:
            raise SceneConfigError("fov_half_angle must be in (0, pi/2]")

    def to_dict(self) -> dict:
        return {
            "position": list(self.position),
            "area": self.area,
            "fov_half_angle": self.fov_half_angle,
            "orientation": list(self.orientation),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Photodetector":
        return cls(
            position=d["position"],
            area=d.get("area", 1e-4),
            fov_half_angle=d.get("fov_half_angle", math.radians(70.0)),
            orientation=d.get("orientation", (0.0, 0.0, -1.0)),
        )


@dataclass(frozen=True)
class Transmitter:
    """The user-carried LED emitter. ``position`` may be None for a template."""

    position: tuple[float, float, float] | None = None
    power: float = 0.01
    lambertian_mode: float = 1.0
    orientation: tuple[float, float, float] = (0.0, 0.0, 1.0)

    def __post_init__(self):
        if self.position is not None:
            object.__setattr__(self, "position", _vec3(self.position, "transmitter position"))
        object.__setattr__(self, "orientation", _unit3(self.orientation, "transmitter orientation"))
        if not self.power > 0.0:
            raise SceneConfigError("transmitter power must be > 0")
        if not self.lambertian_mode >= 1.0:
            raise SceneConfigError("lambertian_mode must be >= 1")

    def to_dict(self) -> dict:
        return {
            "position": None if self.position is None else list(self.position),
            "power": self.power,
            "lambertian_mode": self.lambertian_mode,
            "orientation": list(self.orientation),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Transmitter":
        return cls(
            position=d.get("position"),
            power=d.get("power", 0.01),
            lambertian_mode=d.get("lambertian_mode", 1.0),
            orientation=d.get("orientation", (0.0, 0.0, 1.0)),
        )


@dataclass(frozen=True)
class RoomScene:
    """An empty rectangular room with diffusely reflecting surfaces.

    The transmitter field is a template: its position is filled in per
    evaluation point (see :meth:`transmitter_at`).
    """

    room_size: tuple[float, float, float] = (5.0, 5.0, 3.0)
    wall_reflectance: float = 0.8
    reflecting_element_side: float = 0.02
    transmitters_height: float = 0.85
    photodetectors: tuple[Photodetector, ...] = field(
        default_factory=lambda: tuple(Photodetector(p) for p in DEFAULT_PD_POSITIONS)
    )
    transmitter: Transmitter = field(default_factory=Transmitter)

    def __post_init__(self):
        object.__setattr__(self, "room_size", _vec3(self.room_size, "room_size"))
        if any(s <= 0.0 for s in self.room_size):
            raise SceneConfigError("all room dimensions must be > 0")
        if not 0.0 <= self.wall_reflectance <= 1.0:
            raise SceneConfigError("wall_reflectance must lie in [0, 1]")
        if not self.reflecting_element_side > 0.0:
            raise SceneConfigError("reflecting_element_side must be > 0")
        if not 0.0 <= self.transmitters_height < self.room_size[2]:
            raise SceneConfigError("transmitters_height must be below the ceiling")
        pds = tuple(
            pd if isinstance(pd, Photodetector) else Photodetector(pd)
            for pd in self.photodetectors
        )
        object.__setattr__(self, "photodetectors", pds)
        for i, pd in enumerate(pds):
            if not self.contains(pd.position):
                raise SceneConfigError(f"photodetector {i} lies outside the room box")

    @property
    def pd_count(self) -> int:
        return len(self.photodetectors)

    def contains(self, point) -> bool:
        """True when a point lies inside the room box (boundaries included)."""
        x, y, z = _vec3(point, "point")
        sx, sy, sz = self.room_size
        return 0.0 <= x <= sx and 0.0 <= y <= sy and 0.0 <= z <= sz

    def transmitter_at(self, xy) -> Transmitter:
        """The template transmitter placed at plan position ``xy``."""
        x, y = float(xy[0]), float(xy[1])
        return replace(self.transmitter, position=(x, y, self.transmitters_height))

    def to_dict(self) -> dict:
        return {
            "room_size": list(self.room_size),
            "wall_reflectance": self.wall_reflectance,
            "reflecting_element_side": self.reflecting_element_side,
            "transmitters_height": self.transmitters_height,
            "photodetectors": [pd.to_dict() for pd in self.photodetectors],
            "transmitter": self.transmitter.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RoomScene":
        return cls(
            room_size=d["room_size"],
            wall_reflectance=d["wall_reflectance"],
            reflecting_element_side=d["reflecting_element_side"],
            transmitters_height=d["transmitters_height"],
            photodetectors=tuple(Photodetector.from_dict(p) for p in d["photodetectors"]),
            transmitter=Transmitter.from_dict(d.get("transmitter", {})),
        )

    def digest(self) -> str:
        """Content hash of the scene; used to detect stale databases."""
        payload = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def default_scene(pd_count: int = 4, **overrides) -> RoomScene:
    """The reference scenario, optionally truncated to the first ``pd_count`` PDs."""
    if not 1 <= pd_count <= len(DEFAULT_PD_POSITIONS):
        raise SceneConfigError(f"pd_count must be in 1..{len(DEFAULT_PD_POSITIONS)}")
    if "photodetectors" not in overrides:
        overrides["photodetectors"] = tuple(
            Photodetector(p) for p in DEFAULT_PD_POSITIONS[:pd_count]
        )
    return RoomScene(**overrides)
