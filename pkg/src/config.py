# stdlib
import argparse
import logging
import os
import pathlib
import sys
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

# third party
import yaml

# first party
from src.utils import parse_int_range

logger = logging.getLogger(__name__)

VALID_SUITES = (
    "relations",
    "pbw-span",
    "cohres-dims",
    "module-t0pos",
    "module-t0neg",
    "module-thres",
    "fourier-iso",
    "module-t0weight",
    "module-tnweight",
    "weyl-orbit",
)

VALID_FORMATS = ("json", "csv", "text")

ENV_OUTPUT_DIR = "TORIC_VERIFY_OUTPUT_DIR"
ENV_LOG_LEVEL = "TORIC_VERIFY_LOG_LEVEL"


@dataclass
class RunConfig:
    """Everything a verification run needs.

    Sources, highest precedence first: command-line flags, environment
    (``TORIC_VERIFY_OUTPUT_DIR``, ``TORIC_VERIFY_LOG_LEVEL``), a YAML file
    given with ``--config``, defaults.
    """

    n: int = 2
    ells: List[int] = field(default_factory=lambda: [-2, -1, 0, 1, 2])
    suites: List[str] = field(default_factory=lambda: list(VALID_SUITES))
    window: Optional[Tuple[int, int]] = None
    output_dir: str = "reports"
    format: str = "json"
    log_level: str = "INFO"

    # Tunables
    max_order: int = 4
    max_word_len: int = 3
    iso_order: int = 5
    window_depth: int = 6
    workers: int = 1
    record_timing: bool = False

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"Invalid n: {self.n}. n must be at least 2")
        if not self.suites:
            raise ValueError("No suites requested")
        invalid = [s for s in self.suites if s not in VALID_SUITES]
        if invalid:
            raise ValueError(
                f"Invalid suites: {', '.join(invalid)}. Valid suites are: {VALID_SUITES}"
            )
        if self.format not in VALID_FORMATS:
            raise ValueError(
                f"Invalid format: {self.format}. Valid formats are: {VALID_FORMATS}"
            )
        if not self.ells:
            raise ValueError("Empty ell range")
        if self.window is not None:
            self.window = tuple(self.window)  # type: ignore[assignment]
            if len(self.window) != 2 or self.window[0] > self.window[1]:
                raise ValueError(f"Invalid window: {self.window}. Expected low <= high")
        for name in ("max_order", "max_word_len", "iso_order", "window_depth", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"Invalid {name}: {getattr(self, name)}. Must be positive")

    @property
    def output_path(self) -> pathlib.Path:
        return pathlib.Path(self.output_dir)

    def echo(self) -> Dict[str, Any]:
        """Config as stored in the manifest; no log level, so runs compare equal."""
        data = asdict(self)
        data.pop("log_level")
        data["window"] = list(self.window) if self.window is not None else None
        return data

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "RunConfig":
        """Build from a plain mapping such as a parsed YAML file.

        Unknown keys are logged and ignored. ``ells`` and ``suites`` accept
        either lists or the command-line string syntax.
        """
        known = {f.name for f in fields(cls)}
        values: Dict[str, Any] = {}
        for key, value in data.items():
            name = str(key).replace("-", "_")
            if name == "ell":
                name = "ells"
            if name == "suite":
                name = "suites"
            if name not in known:
                logger.warning(f"Ignoring unknown config key: {key}")
                continue
            values[name] = value
        if isinstance(values.get("ells"), (str, int)):
            values["ells"] = parse_int_range(str(values["ells"]))
        elif "ells" in values:
            values["ells"] = sorted({int(x) for x in values["ells"]})
        if isinstance(values.get("suites"), str):
            values["suites"] = _split_suites(values["suites"])
        if isinstance(values.get("window"), str):
            values["window"] = _parse_window(values["window"])
        return cls(**values)

    @classmethod
    def from_file(cls, path: str) -> Dict[str, Any]:
        """Read the YAML config file into a mapping."""
        with open(path) as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Config file {path} must contain a mapping")
        return data

    @classmethod
    def from_args(cls, argv: Optional[Sequence[str]] = None) -> "RunConfig":
        """Parse command-line flags and merge the other sources under them.

        Raises:
            ValueError: On any invalid value, whatever its source.
        """
        args = build_parser().parse_args(_attach_signed_values(argv))
        merged: Dict[str, Any] = {}
        if args.config:
            merged.update(cls.from_file(args.config))

        env_out = os.getenv(ENV_OUTPUT_DIR)
        if env_out:
            merged["output_dir"] = env_out
        env_level = os.getenv(ENV_LOG_LEVEL)
        if env_level:
            merged["log_level"] = env_level

        flags = {
            "n": args.n,
            "ells": args.ell,
            "suites": args.suite,
            "window": args.window,
            "output_dir": args.out,
            "format": args.format,
            "log_level": args.log_level,
            "max_order": args.max_order,
            "max_word_len": args.max_word_len,
            "iso_order": args.iso_order,
            "window_depth": args.window_depth,
            "workers": args.workers,
        }
        merged.update({k: v for k, v in flags.items() if v is not None})
        if args.record_timing:
            merged["record_timing"] = True
        return cls.from_mapping(merged)


SIGNED_VALUE_FLAGS = ("--ell", "--window")


def _attach_signed_values(argv: Optional[Sequence[str]]) -> List[str]:
    """Join a flag with a negative value (--ell -4:-2 becomes --ell=-4:-2)."""
    tokens = list(sys.argv[1:] if argv is None else argv)
    result: List[str] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        value = tokens[i + 1] if i + 1 < len(tokens) else ""
        if token in SIGNED_VALUE_FLAGS and value[:1] == "-" and value[1:2].isdigit():
            result.append(f"{token}={value}")
            i += 2
            continue
        result.append(token)
        i += 1
    return result


def _split_suites(text: str) -> List[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def _parse_window(text: str) -> Tuple[int, int]:
    idx = text.find(":", 1)
    if idx < 0:
        raise ValueError(f"Invalid window: {text}. Expected low:high")
    return int(text[:idx]), int(text[idx + 1 :])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Exact checks of sp_2n realizations on toric rings and cohomology modules.",
    )
    parser.add_argument("--n", type=int, help="rank n >= 2")
    parser.add_argument("--ell", help="twist: -2, 0,2,4 or an inclusive range a:b (e.g. --ell -4:4)")
    parser.add_argument("--suite", help=f"comma-separated suites from {', '.join(VALID_SUITES)}")
    parser.add_argument("--window", help="weight window low:high")
    parser.add_argument("--format", choices=VALID_FORMATS)
    parser.add_argument("--out", help=f"report directory (env {ENV_OUTPUT_DIR})")
    parser.add_argument("--config", help="YAML file with default settings")
    parser.add_argument("--log-level", help=f"logging level (env {ENV_LOG_LEVEL})")
    parser.add_argument("--max-order", type=int)
    parser.add_argument("--max-word-len", type=int)
    parser.add_argument("--iso-order", type=int)
    parser.add_argument("--window-depth", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--record-timing", action="store_true")
    return parser
