"""Time-series sweeps over one model parameter, figure presets and table output.

A run is described by a small ``key = value`` document::

    # dephasing strength sweep
    [spin]
    K_z = 5
    [channel]
    lambda = 0.1
    [sweep]
    varied = Delta_Q; values = 1, 2, 3
    t_max = 30
    steps = 1500

Keys placed before any section header are looked up by name. Several
statements may share a line when separated by ``;``. A repeated key keeps
its last value, which is how command-line overrides are applied.
"""

from __future__ import annotations

import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from . import __version__
from .channel import ChannelParams, static_average
from .measures import (
    MEASURES,
    MeasureRecord,
    entropic_uncertainty,
    fidelity_to_bell,
    fidelity_to_initial,
    l1_coherence,
    mixedness_entropy,
    negativity,
)
from .spin import SpinParams, thermal_state

CSV_HEADER = "varied,varied_value,t," + ",".join(MEASURES)
FORMATS = ("csv", "json")

SPIN_KEYS = {"J": "J", "delta_z": "delta_z", "D_z": "D_z", "K_z": "K_z", "B": "B", "T": "T"}
CHANNEL_KEYS = {"lambda": "lam", "Delta_Q": "Delta_Q", "delta_o": "delta_o", "epsilon": "epsilon"}
SWEEP_KEYS = ("varied", "values", "t_max", "steps", "measures", "format")
SECTIONS = {"spin": tuple(SPIN_KEYS), "channel": tuple(CHANNEL_KEYS), "sweep": SWEEP_KEYS}
VARIABLE = ("Delta_Q", "lambda", "T", "K_z", "B", "D_z", "delta_z", "J")


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None, key: str | None = None):
        self.line = line
        self.key = key
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key {key!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class PresetError(KeyError):
    def __str__(self):
        return self.args[0]


class SweepError(ValueError):
    """A model or channel error raised for one value of the swept parameter."""


@dataclass(frozen=True)
class SweepSpec:
    spin: SpinParams = field(default_factory=SpinParams)
    channel: ChannelParams = field(default_factory=ChannelParams)
    varied: str = "Delta_Q"
    values: tuple[float, ...] = (1.0, 2.0, 3.0)
    t_max: float = 30.0
    steps: int = 1500
    measures: tuple[str, ...] = MEASURES
    output_format: str = "csv"
    preset: str | None = None
    note: str | None = None

    def __post_init__(self):
        if self.varied not in VARIABLE:
            raise ValueError(f"cannot vary {self.varied!r}; choose one of {', '.join(VARIABLE)}")
        if not self.values:
            raise ValueError("at least one value is required for the varied parameter")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("varied values must be finite")
        if not (math.isfinite(self.t_max) and self.t_max > 0):
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if self.steps < 2:
            raise ValueError(f"steps must be at least 2, got {self.steps}")
        unknown = set(self.measures) - set(MEASURES)
        if unknown or not self.measures:
            raise ValueError(f"measures must be a non-empty subset of {', '.join(MEASURES)}")
        if self.output_format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}")

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.steps)

    def params_for(self, value: float) -> tuple[SpinParams, ChannelParams]:
        if self.varied in SPIN_KEYS:
            return replace(self.spin, **{SPIN_KEYS[self.varied]: value}), self.channel
        return self.spin, replace(self.channel, **{CHANNEL_KEYS[self.varied]: value})


@dataclass
class Dataset:
    """Rows ordered by varied value (outer) then time (inner)."""

    metadata: dict
    varied: str
    rows: list[tuple[float, MeasureRecord]]


def _number(text: str, line: int, key: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"not a number: {text!r}", line, key) from None
    if not math.isfinite(value):
        raise ConfigError(f"not a finite number: {text!r}", line, key)
    return value


def _locate(key: str) -> str | None:
    for name, keys in SECTIONS.items():
        if key in keys:
            return name
    return None


def parse_config(text: str) -> SweepSpec:
    """Parse a sweep document; missing keys keep the :class:`SweepSpec` defaults.

    Raises:
        ConfigError: on an unknown section or key, a malformed value, or a
            value that violates the sweep invariants. The error names the
            offending line and key.
    """
    spin: dict[str, float] = {}
    channel: dict[str, float] = {}
    sweep: dict = {}
    seen: dict[str, int] = {}
    section = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]") or line[1:-1].strip() not in SECTIONS:
                raise ConfigError(f"unknown section {line}", lineno)
            section = line[1:-1].strip()
            continue
        for stmt in filter(None, (s.strip() for s in line.split(";"))):
            if "=" not in stmt:
                raise ConfigError(f"expected 'key = value', got {stmt!r}", lineno)
            key, value = (s.strip() for s in stmt.split("=", 1))
            where = section or _locate(key)
            if where is None or key not in SECTIONS[where]:
                raise ConfigError("unknown key", lineno, key)
            seen[key] = lineno
            if where == "spin":
                spin[SPIN_KEYS[key]] = _number(value, lineno, key)
            elif where == "channel":
                channel[CHANNEL_KEYS[key]] = _number(value, lineno, key)
            elif key == "varied":
                if value not in VARIABLE:
                    raise ConfigError(f"cannot vary {value!r}; choose one of {', '.join(VARIABLE)}", lineno, key)
                sweep["varied"] = value
            elif key == "values":
                items = [s.strip() for s in value.split(",") if s.strip()]
                sweep["values"] = tuple(_number(s, lineno, key) for s in items)
            elif key == "t_max":
                sweep["t_max"] = _number(value, lineno, key)
            elif key == "steps":
                try:
                    sweep["steps"] = int(value)
                except ValueError:
                    raise ConfigError(f"not an integer: {value!r}", lineno, key) from None
            elif key == "measures":
                names = tuple(s.strip() for s in value.split(",") if s.strip())
                bad = [n for n in names if n not in MEASURES]
                if bad or not names:
                    raise ConfigError(f"unknown measure(s) {bad}; choose from {', '.join(MEASURES)}", lineno, key)
                sweep["measures"] = tuple(m for m in MEASURES if m in names)
            elif key == "format":
                if value not in FORMATS:
                    raise ConfigError(f"format must be one of {', '.join(FORMATS)}", lineno, key)
                sweep["output_format"] = value

    try:
        spin_params = SpinParams(**spin)
        channel_params = ChannelParams(**channel)
    except ValueError as err:
        key = "Delta_Q" if "Delta_Q" in str(err) else None
        raise ConfigError(str(err), seen.get(key), key) from None
    try:
        return SweepSpec(spin=spin_params, channel=channel_params, **sweep)
    except ValueError as err:
        msg = str(err)
        key = next((k for k in ("t_max", "steps", "values", "varied") if k in msg), None)
        raise ConfigError(msg, seen.get(key), key) from None


def _evaluate(spec: SweepSpec, value: float, t: np.ndarray) -> dict[str, np.ndarray]:
    spin, channel = spec.params_for(value)
    rho = static_average(thermal_state(spin), channel, t).to_matrix()
    out = {}
    if "NG" in spec.measures:
        out["NG"] = negativity(rho)
    if "EU" in spec.measures:
        out["EU"] = entropic_uncertainty(rho)
    if "LC" in spec.measures:
        out["LC"] = l1_coherence(rho)
    if "EN" in spec.measures:
        out["EN"] = mixedness_entropy(rho)
    if "FID1" in spec.measures:
        out["FID1"] = fidelity_to_initial(spin, channel, t)
    if "FID2" in spec.measures:
        out["FID2"] = fidelity_to_bell(spin, channel, t)
    return out


def spec_metadata(spec: SweepSpec) -> dict:
    channel = {key: getattr(spec.channel, attr) for key, attr in CHANNEL_KEYS.items()}
    return {
        "artifact": "spinchannel",
        "version": __version__,
        "preset": spec.preset,
        "varied": spec.varied,
        "values": list(spec.values),
        "spin": asdict(spec.spin),
        "channel": channel,
        "t_max": spec.t_max,
        "steps": spec.steps,
        "measures": list(spec.measures),
        "note": spec.note,
    }


def run_timeseries(spec: SweepSpec) -> Dataset:
    """Evaluate the requested measures on ``[0, t_max]`` for every varied value."""
    t = spec.times()
    rows = []
    for value in spec.values:
        try:
            series = _evaluate(spec, value, t)
        except (ValueError, ArithmeticError) as err:
            raise SweepError(f"{spec.varied}={value:g}: {err}") from err
        columns = {name: np.asarray(series[name], dtype=float).tolist() for name in series}
        for k, tk in enumerate(t.tolist()):
            rows.append((value, MeasureRecord(t=tk, **{name: col[k] for name, col in columns.items()})))
    return Dataset(metadata=spec_metadata(spec), varied=spec.varied, rows=rows)


_BASE = "[spin]\nJ = 1; delta_z = 1; D_z = 1; B = 1\n"

# name -> config document; value lists not printed in the captions are choices
PRESETS = {
    "fig1": _BASE + "K_z = 5; T = 1\n[channel]\nlambda = 0.1\n[sweep]\nvaried = Delta_Q; values = 1, 2, 3\n",
    "fig2": _BASE + "K_z = 5; T = 1\n[channel]\nDelta_Q = 2\n[sweep]\nvaried = lambda; values = 0.05, 0.1, 0.3, 0.5\n",
    "fig3": _BASE + "K_z = 5\n[channel]\nDelta_Q = 2; lambda = 0.1\n[sweep]\nvaried = T; values = 0.1, 1, 4, 7\n",
    "fig4": _BASE + "T = 1\n[channel]\nDelta_Q = 2; lambda = 0.1\n[sweep]\nvaried = K_z; values = 1, 3, 5\n",
    "fig5": _BASE + "K_z = 5; T = 1\n[channel]\nDelta_Q = 2; lambda = 0.1\n[sweep]\nvaried = B; values = 1, 5, 9\n",
    "fig6": _BASE + "K_z = 5; T = 1\n[channel]\nDelta_Q = 2; lambda = 0.1\n[sweep]\nvaried = D_z; values = 1, 3.5, 5, 6\n",
    "fig7": _BASE + "K_z = 5; T = 1\n[channel]\nDelta_Q = 2; lambda = 0.1\n[sweep]\nvaried = delta_z; values = 1, 3.5, 6\n",
    "fig8": _BASE
    + "K_z = 5; T = 0.5\n[channel]\nDelta_Q = 2; lambda = 0.1\n[sweep]\n"
    + "varied = J; values = -6, -4.5, -3.5, -1, 1, 3.5, 4.5, 6\n",
    "fig10a": _BASE
    + "K_z = 5; T = 0.5\n[channel]\nlambda = 0.1\n[sweep]\nvaried = Delta_Q; values = 1, 3, 5\nmeasures = FID1\n",
    "fig10b": _BASE
    + "K_z = 5; T = 0.5\n[channel]\nlambda = 0.1\n[sweep]\nvaried = Delta_Q; values = 1, 3, 5\nmeasures = FID2\n",
}

PRESET_NOTES = {
    "fig1": "Delta_Q values chosen; captions fix lambda=0.1, K_z=5, others 1",
    "fig2": "lambda values chosen to span weak and strong coupling",
    "fig3": "T values include 0.1 and 7 from the discussion",
    "fig4": "K_z values as discussed: 1, 3, 5",
    "fig5": "B values 1, 5, 9 from the discussion",
    "fig6": "D_z values include 3.5 and 6 from the discussion",
    "fig7": "delta_z values 1, 3.5, 6 from the discussion",
    "fig8": "J spans both signs over [1, 6] including the 3.5 and 4.5 thresholds",
    "fig10a": "fidelity to the thermal state; Delta_Q values include 5",
    "fig10b": "fidelity to (|00>+|11>)/sqrt(2); Delta_Q values include 5",
}
PRESET_DEFAULTS_NOTE = "delta_o=1 and epsilon=1 are not given in the captions and are pinned"


def preset_text(name: str) -> str:
    try:
        return PRESETS[name]
    except KeyError:
        raise PresetError(f"unknown preset {name!r}; valid presets: {', '.join(PRESETS)}") from None


def preset_spec(name: str, overrides: str = "") -> SweepSpec:
    spec = parse_config(preset_text(name) + overrides)
    return replace(spec, preset=name, note=f"{PRESET_NOTES[name]}; {PRESET_DEFAULTS_NOTE}")


def run_preset(name: str) -> Dataset:
    return run_timeseries(preset_spec(name))


def _fmt(x: float | None) -> str:
    if x is None:
        return ""
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def to_csv(d: Dataset) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for value, rec in d.rows:
        cells = [d.varied, _fmt(value), _fmt(rec.t)] + [_fmt(getattr(rec, m)) for m in MEASURES]
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()


def to_json(d: Dataset) -> str:
    rows = [{"varied": d.varied, "varied_value": value, **asdict(rec)} for value, rec in d.rows]
    return json.dumps({"metadata": d.metadata, "rows": rows}, indent=1, allow_nan=False) + "\n"


def emit_table(d: Dataset, fmt: str = "csv", destination: str | None = None) -> None:
    """Write a dataset as CSV or JSON to ``destination`` (standard output if ``None`` or ``"-"``)."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {', '.join(FORMATS)}")
    text = to_csv(d) if fmt == "csv" else to_json(d)
    if destination in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as err:
        raise OSError(err.errno, f"cannot write output: {err.strerror}", destination) from err
