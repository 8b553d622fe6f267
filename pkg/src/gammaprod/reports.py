"""Verification suites and report serialization behind the command line.

Each suite returns a list of :class:`ReportRow`; a row passes when its
absolute error is within ``max(bound, tol)``. Rows are produced in a fixed
order and every random draw uses a fixed seed, so output is reproducible
byte for byte.
"""

from __future__ import annotations

import io
import json
import math
import random
from dataclasses import dataclass, field

from . import brouncker_cf as bcf
from . import correspondence as corr
from . import gamma_kernel as gk
from . import identities as ids
from . import product_engine as pe
from . import variational_atom as va
from .errors import DomainError

COLUMNS = ("case", "inputs", "value", "target", "abs_err", "bound", "terms", "pass")
CONVERGE_COLUMNS = ("k", "value", "deviation", "order")

NAMED_FAMILIES = ((2, 0), (4, 0), (4, 1), (6, 0), (6, 1), (6, 2), (8, 0), (8, 1), (8, 2), (8, 3))
GENERALIZED_A = (-0.25, 0.35, 1.5, 3.2)
TRIANGLE_S = (0.5, 1.0, 2.0, 3.0, 5.0, 7.3)
ALPHA_GRID = (0.05, 0.3, 0.7, 1.5, 4.0)
B_GRID = (0.5, 1.0, 2.0, 4.0, 6.0)
ELL_GRID = (0, 1, 5)


@dataclass(frozen=True)
class ReportRow:
    case: str
    inputs: str
    value: float
    target: float
    abs_err: float
    bound: float
    terms: int
    passed: bool

    def as_dict(self):
        return {
            "case": self.case, "inputs": self.inputs, "value": self.value,
            "target": self.target, "abs_err": self.abs_err, "bound": self.bound,
            "terms": self.terms, "pass": self.passed,
        }


def format_inputs(**kw):
    """'b=2;a=0;N=3' style key list, floats in shortest round-trip form."""
    parts = []
    for key, v in kw.items():
        if isinstance(v, float) and v.is_integer():
            v = int(v)
        parts.append(f"{key}={v!r}" if isinstance(v, float) else f"{key}={v}")
    return ";".join(parts)


def make_row(case, inputs, value, target, bound=0.0, terms=0, tol=0.0):
    value, target, bound = float(value), float(target), float(bound)
    err = abs(value - target)
    ok = err <= max(bound, tol) if math.isfinite(err) else False
    return ReportRow(case, inputs, value, target, err, bound, int(terms), bool(ok))


# --- serialization -----------------------------------------------------------

def _num(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return format(x, ".17g")


def _json_value(x):
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, float) and not math.isfinite(x):
        return json.dumps(_num(x))
    return _num(x)


def _csv_value(x):
    if isinstance(x, str):
        return '"' + x.replace('"', '""') + '"' if any(c in x for c in ',"\n') else x
    return _num(x)


def _records(rows):
    return [r.as_dict() if isinstance(r, ReportRow) else r for r in rows]


def to_json(rows, columns=COLUMNS):
    lines = []
    for rec in _records(rows):
        body = ", ".join(f"{json.dumps(c)}: {_json_value(rec[c])}" for c in columns)
        lines.append("  {" + body + "}")
    return "[\n" + ",\n".join(lines) + "\n]\n" if lines else "[]\n"


def to_csv(rows, columns=COLUMNS):
    out = [",".join(columns)]
    for rec in _records(rows):
        out.append(",".join(_csv_value(rec[c]) for c in columns))
    return "\n".join(out) + "\n"


def to_table(rows, columns=COLUMNS):
    def cell(x):
        if isinstance(x, bool):
            return "PASS" if x else "FAIL"
        if isinstance(x, float):
            return format(x, ".10g")
        return str(x)

    cells = [list(columns)] + [[cell(rec[c]) for c in columns] for rec in _records(rows)]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells) + "\n"


def render(rows, fmt, columns=COLUMNS):
    writers = {"json": to_json, "csv": to_csv, "table": to_table}
    if fmt not in writers:
        raise DomainError(f"unknown format {fmt!r}")
    return writers[fmt](rows, columns)


def _from_json_value(x):
    if x in ("inf", "-inf", "nan"):
        return float(x)
    return x


def rows_from_json(text):
    """Inverse of :func:`to_json` for report rows."""
    out = []
    for rec in json.loads(text):
        rec = {k: _from_json_value(v) for k, v in rec.items()}
        out.append(ReportRow(
            rec["case"], rec["inputs"], float(rec["value"]), float(rec["target"]),
            float(rec["abs_err"]), float(rec["bound"]), int(rec["terms"]), bool(rec["pass"]),
        ))
    return out


def rows_from_csv(text):
    import csv

    reader = csv.DictReader(io.StringIO(text))
    return [
        ReportRow(
            r["case"], r["inputs"], float(r["value"]), float(r["target"]), float(r["abs_err"]),
            float(r["bound"]), int(r["terms"]), r["pass"] == "true",
        )
        for r in reader
    ]


# --- sweep configuration -----------------------------------------------------

_GRID_KEYS = ("b", "a", "N", "ell", "s", "n", "k", "depth", "z", "alpha")
_KEY_ALIASES = {"n-dim": "N", "n_dim": "N"}


@dataclass
class SweepConfig:
    """Parameter grids plus tolerance and output settings.

    A grid left as ``None`` means "use the suite's default grid".
    """

    grids: dict = field(default_factory=dict)
    tol: float | None = None
    fmt: str = "table"
    out: str | None = None

    def grid(self, key, default=None):
        values = self.grids.get(key)
        return tuple(values) if values else default

    def one(self, key, default=None):
        values = self.grids.get(key)
        if not values:
            if default is None:
                raise DomainError(f"missing required parameter {key!r}")
            return default
        if len(values) != 1:
            raise DomainError(f"{key!r} takes a single value here, got {len(values)}")
        return values[0]

    def tol_or(self, default):
        return default if self.tol is None else self.tol


def parse_number(text):
    x = float(text)
    return int(x) if x.is_integer() and "." not in text and "e" not in text.lower() else x


def parse_list(text):
    return [parse_number(t) for t in str(text).split(",") if t.strip()]


def read_config(text):
    """Flat ``key = value`` lines; repeated keys and comma lists build grids."""
    grids, settings = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected key = value, got {raw!r}")
        key, value = (p.strip() for p in line.split("=", 1))
        key = _KEY_ALIASES.get(key, key)
        if key in _GRID_KEYS:
            grids.setdefault(key, []).extend(parse_list(value))
        elif key in ("tol", "format", "out"):
            settings[key] = value
        else:
            raise DomainError(f"config line {lineno}: unknown key {key!r}")
    cfg = SweepConfig(grids=grids)
    if "tol" in settings:
        cfg.tol = float(settings["tol"])
    if "format" in settings:
        cfg.fmt = settings["format"]
    if "out" in settings:
        cfg.out = settings["out"]
    return cfg


# --- suites ------------------------------------------------------------------

def suite_products(cfg):
    """Tail-corrected products against their gamma targets.

    With no b grid the named even-b families are checked. A user b grid
    (odd, fractional, ...) switches to generalized parameters, crossing b
    with the a grid (default covers negative and fractional a) and N grid.
    """
    tol = cfg.tol_or(1e-9)
    rows = []
    b_grid = cfg.grid("b")
    if b_grid is None:
        pairs = [(float(b), float(a), 3) for b, a in NAMED_FAMILIES]
    else:
        a_grid = cfg.grid("a", GENERALIZED_A)
        n_grid = cfg.grid("N", (3, 4))
        pairs = [(float(b), float(a), int(N)) for b in b_grid for a in a_grid for N in n_grid
                 if 2 * a + N - 2 > 0]
    for b, a, N in pairs:
        f = pe.ProductFamily(b, a, N)
        ev = pe.evaluate(f, tol)
        case = "product_generalized" if f.generalized else "product"
        rows.append(make_row(case, format_inputs(b=b, a=a, N=N), ev.value,
                             pe.closed_form_target(f), ev.error_bound, ev.terms_used, tol))
    return rows


def suite_reflection(cfg):
    rows = []
    bs = cfg.grid("b", tuple(range(2, 65, 2)))
    for b in bs:
        z = 1.0 / b
        rows.append(make_row("reflection_gamma", format_inputs(z=f"1/{b}"),
                             ids.reflection_check(z), 1.0, tol=1e-12))
    for b in bs:
        ev = ids.reflection_product_rhs(b, 1e-9)
        rows.append(make_row("reflection_product", format_inputs(b=b), ev.value,
                             math.pi / math.sin(math.pi / b), ev.error_bound, ev.terms_used, 1e-8))
    for b in (2, 4, 6, 8):
        ev = ids.sine_product(1.0 / b, 10**5)
        rows.append(make_row("sine_product", format_inputs(z=f"1/{b}", K=10**5), ev.value,
                             math.sin(math.pi / b) / math.pi, ev.error_bound, ev.terms_used, 1e-8))
    for b in (4, 6, 8, 12):
        rows.append(make_row("half_shift_reflection", format_inputs(b=b, a=0, N=b // 2 + 1),
                             ids.half_shift_reflection_check(b, 1e-10), 1.0, tol=1e-9))
    return rows


def suite_special(cfg):
    tol = cfg.tol_or(1e-9)
    rows = []
    for sv in ids.all_special_values(pow2=tuple(cfg.grid("n", (3, 4, 5)))):
        ev = sv.from_product(tol)
        f = sv.family
        rows.append(make_row(sv.label, format_inputs(b=f.b, a=f.a, N=f.N), ev.value, sv.target,
                             ev.error_bound, ev.terms_used, 2 * tol if sv.case is not ids.Case.POW2 else 1e-8))
    rows.append(make_row("B6_A0_closed_forms", "gamma_form;radical_form", ids.b6_a0_gamma_form(),
                         ids.b6_a0_radical_form(), tol=1e-12))
    for n in range(3, 26):
        exact = math.sin(math.pi / 2**n)
        rows.append(make_row("nested_radical_sin", format_inputs(n=n), ids.nested_radical_sin(n),
                             exact, tol=1e-12 * exact))
    return rows


def suite_variational(cfg):
    rows = []
    for alpha in cfg.grid("alpha", ALPHA_GRID):
        for b in cfg.grid("b", B_GRID):
            for ell in cfg.grid("ell", ELL_GRID):
                p = va.TrialParams(float(alpha), float(b), int(ell), 3)
                closed = va.expectation_H(p)
                quad = va.expectation_H_quadrature(p, tol=1e-8)
                rows.append(make_row("energy_quadrature", format_inputs(alpha=alpha, b=b, ell=ell),
                                     quad.value, closed, quad.error_bound, quad.terms_used,
                                     1e-6 * abs(closed)))
    for b in cfg.grid("b", B_GRID):
        for ell in cfg.grid("ell", ELL_GRID):
            e_an, _ = va.min_energy_analytic(float(b), int(ell))
            e_num, _ = va.min_energy_numeric(float(b), int(ell))
            rows.append(make_row("min_energy_numeric", format_inputs(b=b, ell=ell), e_num, e_an,
                                 tol=1e-9 * abs(e_an)))
            if b == 1:
                continue  # equality case, covered by exact_at_b1
            exact = va.exact_energy(va.ExactLevel(0, int(ell), 3))
            # violation of the variational bound; zero when <H>_min >= E_exact
            rows.append(make_row("variational_bound", format_inputs(b=b, ell=ell),
                                 max(0.0, exact - e_an), 0.0))
    for N in (3, 4, 5, 9):
        for ell in range(21):
            e_an, _ = va.min_energy_analytic(1.0, ell, N)
            exact = va.exact_energy(va.ExactLevel(0, ell, N))
            rows.append(make_row("exact_at_b1", format_inputs(ell=ell, N=N), e_an, exact,
                                 tol=1e-12 * abs(exact)))
    return rows


def _order_estimate(ks, devs):
    return math.log(devs[-2] / devs[-1]) / math.log(ks[-1] / ks[-2])


def suite_correspondence(cfg):
    rows = [make_row("ratio_ground", format_inputs(ell=0, b=2, N=3), corr.ratio(0, 2, 3),
                     8 / (3 * math.pi), tol=1e-12)]
    for b, a in ((2, 0), (4, 1), (6, 2)):
        spec = corr.RatioSequenceSpec(b, a, 3, k_max=100)
        limit = corr.extrapolate_limit(corr.ratio_sequence(spec), spec.abscissae, levels=2)
        rows.append(make_row("ratio_limit", format_inputs(b=b, a=a, k_max=100), limit, 1.0, tol=1e-6))
        f = corr.derive_product_family(spec, check_k=50)
        half = b // 2
        worst = max(abs(corr.telescoped_ratio(f, K) / corr.ratio(a + K * half, b) - 1) for K in (0, 10, 50, 100))
        rows.append(make_row("ratio_telescoping", format_inputs(b=b, a=a), 1.0 + worst, 1.0, tol=1e-10))
        ells = [100, 1000, 10000]
        devs = [1 - corr.ratio(e, b) for e in ells]
        rows.append(make_row("ratio_order", format_inputs(b=b, ell="100..10000"),
                             _order_estimate(ells, devs), 1.0, tol=0.05))
    return rows


def suite_brouncker(cfg):
    rows = []
    for s, exact in ((1.0, 4 / math.pi), (3.0, math.pi), (5.0, 16 / math.pi)):
        rows.append(make_row("cf_gamma_form", format_inputs(s=s), bcf.cf_gamma_form(s), exact,
                             tol=4 * pe.EPS * exact))
    ev = bcf.cf_eval(bcf.CFSpec(1.0, tol=1e-6))
    rows.append(make_row("cf_adaptive", format_inputs(s=1, tol=1e-6), ev.value, 4 / math.pi,
                         ev.error_bound, ev.terms_used, 1e-6))
    for s in cfg.grid("s", TRIANGLE_S):
        g = bcf.cf_gamma_form(s)
        cf = bcf.cf_eval(bcf.CFSpec(float(s), tol=1e-8))
        prod = bcf.cf_product_form(float(s), 1e-8)
        inputs = format_inputs(s=s)
        rows.append(make_row("triangle_cf_gamma", inputs, cf.value, g, cf.error_bound, cf.terms_used, 3e-8))
        rows.append(make_row("triangle_product_gamma", inputs, prod.value, g, prod.error_bound,
                             prod.terms_used, 3e-8))
        rows.append(make_row("triangle_cf_product", inputs, cf.value, prod.value, 0.0, cf.terms_used, 3e-8))
    rng = random.Random(20240601)
    for s in [1.0] + [rng.uniform(1.0, 50.0) for _ in range(20)]:
        rows.append(make_row("functional_equation", format_inputs(s=s),
                             bcf.functional_equation_check(s), 1.0, tol=1e-12))
    limit = 4 / math.pi
    for d in (10, 100, 1000):
        lo = bcf.cf_eval(bcf.CFSpec(1.0, depth=d)).value
        hi = bcf.cf_eval(bcf.CFSpec(1.0, depth=d + 1)).value
        # the limit sits between consecutive truncations; report the excess outside
        outside = max(0.0, min(lo, hi) - limit, limit - max(lo, hi))
        rows.append(make_row("cf_bracketing", format_inputs(s=1, depth=f"{d},{d + 1}"),
                             outside, 0.0, terms=d + 1))
    wallis = pe.evaluate(pe.ProductFamily(2.0, 0.0), 1e-10)
    rows.append(make_row("wallis_bridge", format_inputs(s=1), wallis.value, 2 / bcf.cf_gamma_form(1.0),
                         wallis.error_bound, wallis.terms_used, 1e-9))
    return rows


def suite_appendix(cfg):
    """Pochhammer rewrite, generalized products, gamma-ratio limits and the r² spread."""
    rows = []
    for b in (2, 4, 6, 8):
        for a in range(b // 2):
            f = pe.ProductFamily(float(b), float(a))
            worst, worst_ell = 0.0, 0
            for ell in range(21):
                lhs, rhs = pe.pochhammer_identity_check(f, ell)
                r = abs(lhs / rhs - 1)
                if r >= worst:
                    worst, worst_ell = r, ell
            rows.append(make_row("pochhammer_rewrite", format_inputs(b=b, a=a, ell="0..20"),
                                 1.0 + worst, 1.0, terms=21, tol=1e-13))
    rng = random.Random(7)
    for _ in range(8):
        b = float(rng.choice((1, 3, 5, 7)))
        a = round(rng.uniform(-0.4, 3.0), 6)
        f = pe.ProductFamily(b, a)
        ev = pe.evaluate(f, 1e-9)
        rows.append(make_row("product_generalized", format_inputs(b=b, a=a, N=3), ev.value,
                             pe.closed_form_target(f), ev.error_bound, ev.terms_used, 1e-8))
    ms = (16, 32, 64, 128, 256, 512, 1024)
    for z1, z2, w1, w2 in ((0.3, 1.9, 1.1, 1.1), (2.5, 0.5, 1.0, 2.0)):
        vals = pe.gamma_ratio_limit_check(z1, z2, w1, w2, ms)
        limit = corr.extrapolate_limit(vals, ms, levels=3)
        rows.append(make_row("gamma_ratio_limit", format_inputs(z1=z1, z2=z2, w1=w1, w2=w2, m="16..1024"),
                             limit, 1.0, terms=len(ms), tol=1e-8))
    u0 = va.uncertainty_r2(va.TrialParams(1.0, 2.0, 0))
    rows.append(make_row("uncertainty_ground", format_inputs(b=2, ell=0), u0, math.sqrt(2 / 3), tol=1e-12))
    seq = [va.uncertainty_r2(va.TrialParams(1.0, 2.0, ell)) for ell in range(0, 201)]
    rises = sum(1 for x, y in zip(seq, seq[1:]) if not y < x)
    rows.append(make_row("uncertainty_decreasing", format_inputs(b=2, ell="0..200"), rises, 0))
    u_big = va.uncertainty_r2(va.TrialParams(1.0, 2.0, 10**4))
    rows.append(make_row("uncertainty_large_ell", format_inputs(b=2, ell=10**4), u_big, 0.0, tol=0.02))
    return rows


SUITES = {
    "products": suite_products,
    "reflection": suite_reflection,
    "special": suite_special,
    "variational": suite_variational,
    "correspondence": suite_correspondence,
    "brouncker": suite_brouncker,
    "appendix": suite_appendix,
}


def run_suite(name, cfg):
    if name == "all":
        return [row for key in SUITES for row in SUITES[key](cfg)]
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}")
    return SUITES[name](cfg)


# --- single evaluations ------------------------------------------------------

def eval_row(target, cfg):
    """One ReportRow comparing an operation against an independent route."""
    if target == "product":
        b, a, N = float(cfg.one("b")), float(cfg.one("a", 0.0)), int(cfg.one("N", 3))
        tol = cfg.tol_or(1e-10)
        f = pe.ProductFamily(b, a, N)
        ev = pe.evaluate(f, tol)
        return make_row("product", format_inputs(b=b, a=a, N=N), ev.value, pe.closed_form_target(f),
                        ev.error_bound, ev.terms_used, tol)
    if target == "gamma":
        z = float(cfg.one("z"))
        tol = cfg.tol_or(1e-10)
        if z > 0 and z < 150:
            ev = gk.gamma_integral_quadrature(z, max(tol, 1e-13))
            return make_row("gamma", format_inputs(z=z), gk.gamma(z), ev.value, ev.error_bound,
                            ev.terms_used, tol * max(1.0, abs(ev.value)))
        ref = gk.gamma_euler_limit(z, 10**6)
        return make_row("gamma", format_inputs(z=z), gk.gamma(z), ref, tol=1e-5 * abs(ref))
    if target == "energy":
        b, ell, N = float(cfg.one("b")), int(cfg.one("ell", 0)), int(cfg.one("N", 3))
        e_an, _ = va.min_energy_analytic(b, ell, N)
        e_num, _ = va.min_energy_numeric(b, ell, N)
        return make_row("energy", format_inputs(b=b, ell=ell, N=N), e_an, e_num, tol=1e-9 * abs(e_an))
    if target == "ratio":
        b, ell, N = float(cfg.one("b")), int(cfg.one("ell", 0)), int(cfg.one("N", 3))
        e_an, _ = va.min_energy_analytic(b, ell, N)
        exact = va.exact_energy(va.ExactLevel(0, ell, N))
        return make_row("ratio", format_inputs(b=b, ell=ell, N=N), corr.ratio(ell, b, N), e_an / exact,
                        tol=1e-12)
    if target == "uncertainty":
        b, ell, N = float(cfg.one("b")), int(cfg.one("ell", 0)), int(cfg.one("N", 3))
        p = va.TrialParams(1.0, b, ell, N)
        power = 2 * ell + N - 1
        m0, m2, m4 = (va.radial_moment(power + j, 1.0, b, 1e-12).value for j in (0, 2, 4))
        ref = math.sqrt(m4 * m0 / (m2 * m2) - 1)
        return make_row("uncertainty", format_inputs(b=b, ell=ell, N=N), va.uncertainty_r2(p), ref,
                        tol=1e-8 * ref)
    if target == "brouncker":
        s = float(cfg.one("s"))
        depth = cfg.grids.get("depth")
        if depth:
            spec = bcf.CFSpec(s, depth=int(cfg.one("depth")))
            tol = cfg.tol_or(1e-6)
        else:
            tol = cfg.tol_or(1e-8)
            spec = bcf.CFSpec(s, tol=tol)
        ev = bcf.cf_eval(spec)
        bound = ev.error_bound if math.isfinite(ev.error_bound) else 0.0
        return make_row("brouncker", format_inputs(s=s), ev.value, bcf.cf_gamma_form(s), bound,
                        ev.terms_used, tol)
    if target == "reflection":
        b = int(cfg.one("b"))
        tol = cfg.tol_or(1e-9)
        ev = ids.reflection_product_rhs(b, tol)
        return make_row("reflection", format_inputs(b=b), ev.value, math.pi / math.sin(math.pi / b),
                        ev.error_bound, ev.terms_used, tol)
    raise DomainError(f"unknown eval target {target!r}")


# --- convergence tables ------------------------------------------------------

def _with_orders(ks, values, devs):
    out = []
    for i, (k, v, d) in enumerate(zip(ks, values, devs)):
        if i == 0 or d == 0 or devs[i - 1] == 0:
            order = math.nan
        else:
            order = math.log(abs(devs[i - 1]) / abs(d)) / math.log(k / ks[i - 1])
        out.append({"k": int(k), "value": float(v), "deviation": float(d), "order": order})
    return out


def converge_table(kind, cfg):
    """(k, value, deviation, order) rows; order is the local slope of log|deviation|."""
    if kind == "product":
        f = pe.ProductFamily(float(cfg.one("b")), float(cfg.one("a", 0.0)), int(cfg.one("N", 3)))
        ks = [int(k) for k in cfg.grid("k", (10, 100, 1000, 10000))]
        target = pe.closed_form_target(f)
        vals = [pe.partial_product(f, k).value for k in ks]
        devs = [target - v for v in vals]
    elif kind == "ratio":
        b, a, N = int(cfg.one("b")), int(cfg.one("a", 0)), int(cfg.one("N", 3))
        corr.RatioSequenceSpec(b, a, N)  # validates the residue class
        ks = [int(k) for k in cfg.grid("k", (10, 100, 1000, 10000))]
        vals = [corr.ratio(a + k * (b // 2), b, N) for k in ks]
        devs = [1.0 - v for v in vals]
    elif kind == "cf":
        s = float(cfg.one("s", 1.0))
        ks = [int(k) for k in cfg.grid("depth", (10, 100, 1000, 10000))]
        vals = [bcf.truncate(s, k) for k in ks]
        target = bcf.cf_gamma_form(s)
        devs = [v - target for v in vals]
    else:
        raise DomainError(f"unknown convergence kind {kind!r}")
    if any(k <= 0 for k in ks):
        raise DomainError("k values must be positive")
    return _with_orders(ks, vals, devs)
