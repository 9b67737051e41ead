"""Experiment configuration: plain-text key-value files with section headers.

Functions are specified as harmonic lists, one triple
(amplitude, harmonic, phase) per term, meaning amp * cos(2 pi h z / L + ph);
this maps one-to-one onto the package's trigonometric polynomials, so no
expression parsing is involved. Emission and parsing round-trip exactly
(floats are written in shortest round-trip form).
"""

import configparser
import io
import math
from dataclasses import dataclass, field

KINDS = ("single-particle", "anomaly", "fock", "hs-check", "sweep")
SWEEP_AXES = ("N", "amplitude", "L")


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    L: float = 2.0 * math.pi
    N: int = 24
    tol: float = 1e-9
    seed: int = 1
    out: str = "reports"
    f_terms: tuple = ((1.0, 1, 0.0),)
    chi_terms: tuple = ((0.7, 1, -0.5 * math.pi),)
    time: float = 1.0
    cases: int = 20
    sweep_axis: str = "N"
    sweep_values: tuple = ()
    fock_r_max: int = 2
    fock_include_surface: bool = False
    hs_amplitudes: tuple = (0.2, 0.4, 0.8)
    hs_cutoffs: tuple = ()

    def validate(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}; "
                             f"expected one of {KINDS}")
        if self.L <= 0:
            raise ValueError("L must be positive")
        if self.N < 1:
            raise ValueError("N must be a positive integer")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        for name, terms in (("f", self.f_terms), ("chi", self.chi_terms)):
            for amp, harmonic, phase in terms:
                if not (math.isfinite(amp) and math.isfinite(phase)):
                    raise ValueError(f"non-finite term in function {name}")
                if harmonic < 0 or harmonic != int(harmonic):
                    raise ValueError(f"harmonic indices must be nonnegative "
                                     f"integers (function {name})")
                if 6 * harmonic > self.N:
                    raise ValueError(
                        f"harmonic {harmonic} of function {name} violates "
                        f"admissibility (need harmonic <= N/6 = {self.N / 6:g})")
        if self.kind == "sweep":
            if self.sweep_axis not in SWEEP_AXES:
                raise ValueError(f"sweep axis must be one of {SWEEP_AXES}")
            if not self.sweep_values:
                raise ValueError("sweep requires a nonempty value list")
            if list(self.sweep_values) != sorted(self.sweep_values):
                raise ValueError("sweep values must be sorted ascending")
        if self.kind == "fock" and self.fock_r_max < 1:
            raise ValueError("fock window needs r_max >= 1")
        if self.kind == "hs-check" and not self.hs_amplitudes:
            raise ValueError("hs-check requires at least one amplitude")
        return self


def _format_float(x):
    return repr(float(x))


def _format_terms(terms):
    return " ".join(f"{_format_float(a)},{int(h)},{_format_float(p)}"
                    for a, h, p in terms)


def _parse_terms(text):
    terms = []
    for chunk in text.split():
        parts = chunk.split(",")
        if len(parts) != 3:
            raise ValueError(f"malformed term {chunk!r}; expected "
                             f"amplitude,harmonic,phase")
        terms.append((float(parts[0]), int(parts[1]), float(parts[2])))
    return tuple(terms)


def _parse_floats(text):
    return tuple(float(v) for v in text.replace(",", " ").split())


def emit_config(cfg):
    """Serialize a configuration to its canonical text form."""
    lines = ["[experiment]",
             f"kind = {cfg.kind}",
             f"L = {_format_float(cfg.L)}",
             f"N = {cfg.N}",
             f"tol = {_format_float(cfg.tol)}",
             f"seed = {cfg.seed}",
             f"out = {cfg.out}",
             "",
             "[function.f]",
             f"terms = {_format_terms(cfg.f_terms)}",
             "",
             "[function.chi]",
             f"terms = {_format_terms(cfg.chi_terms)}",
             ""]
    if cfg.kind == "single-particle":
        lines += ["[single-particle]",
                  f"time = {_format_float(cfg.time)}",
                  f"cases = {cfg.cases}",
                  ""]
    if cfg.kind == "sweep":
        lines += ["[sweep]",
                  f"axis = {cfg.sweep_axis}",
                  "values = " + " ".join(_format_float(v)
                                         for v in cfg.sweep_values),
                  ""]
    if cfg.kind == "fock":
        lines += ["[fock]",
                  f"r_max = {cfg.fock_r_max}",
                  f"include_surface = {str(cfg.fock_include_surface).lower()}",
                  ""]
    if cfg.kind == "hs-check":
        lines += ["[hs-check]",
                  "amplitudes = " + " ".join(_format_float(a)
                                             for a in cfg.hs_amplitudes),
                  "cutoffs = " + " ".join(str(int(n))
                                          for n in cfg.hs_cutoffs),
                  ""]
    return "\n".join(lines)


def parse_config(text):
    """Parse the key-value format back into a configuration (validated)."""
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ValueError(f"malformed config: {exc}") from exc
    if "experiment" not in parser:
        raise ValueError("config is missing the [experiment] section")
    exp = parser["experiment"]
    kwargs = {
        "kind": exp.get("kind", ""),
        "L": exp.getfloat("L", 2.0 * math.pi),
        "N": exp.getint("N", 24),
        "tol": exp.getfloat("tol", 1e-9),
        "seed": exp.getint("seed", 1),
        "out": exp.get("out", "reports"),
    }
    if "function.f" in parser:
        kwargs["f_terms"] = _parse_terms(parser["function.f"].get("terms", ""))
    if "function.chi" in parser:
        kwargs["chi_terms"] = _parse_terms(parser["function.chi"].get("terms", ""))
    if "single-particle" in parser:
        sp = parser["single-particle"]
        kwargs["time"] = sp.getfloat("time", 1.0)
        kwargs["cases"] = sp.getint("cases", 20)
    if "sweep" in parser:
        sw = parser["sweep"]
        kwargs["sweep_axis"] = sw.get("axis", "N")
        kwargs["sweep_values"] = _parse_floats(sw.get("values", ""))
    if "fock" in parser:
        fk = parser["fock"]
        kwargs["fock_r_max"] = fk.getint("r_max", 2)
        kwargs["fock_include_surface"] = fk.getboolean("include_surface", False)
    if "hs-check" in parser:
        hs = parser["hs-check"]
        kwargs["hs_amplitudes"] = _parse_floats(hs.get("amplitudes", ""))
        kwargs["hs_cutoffs"] = tuple(int(v) for v in
                                     _parse_floats(hs.get("cutoffs", "")))
    return ExperimentConfig(**kwargs).validate()


def load_config(path):
    with io.open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
