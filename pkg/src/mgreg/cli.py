"""Command line front end.

Problem files are line based.  Each logical line is ``key: name=value ...``
where every value is JSON; indented lines continue the previous one and
``#`` starts a comment.  Keys::

    ring:   blocks=[2,2] p=32003
    module: shifts=[[0,0]] relations=["x1*y1", "x2*y2"]
    tasks:  commands=["resreg", "grid"] box=[[-3,-3],[3,3]] tmax=10 seed=0

Only ``ring`` is required.  Relations of a rank r module are lists of r
polynomial strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources

from .algebra import (DEFAULT_PRIME, PolySyntaxError, RingSpec, ideal_family, ideal_label,
                      irrelevant_ideal, maximal_ideal, parse_poly)
from .cohomology import (DEFAULT_TMAX, CohTable, NotStabilized, a_star_components,
                         a_star_vector, hb_piece, local_cohomology_all)
from .degrees import Box, geq
from .groebner import FreeMod, is_homogeneous
from .invariants import (NONMEMBER, THEOREMS, UNVERIFIED, ci_d_vector, fiber_a_bounds,
                         reg_grid, verify_theorem, witness_indices)
from .modules import Presentation, quotient_ring
from .resolution import betti_table, free_resolution, is_purely_increasing, proj_dim, res_reg_vector

COMMANDS = ("resolve", "betti", "resreg", "avector", "coh", "grid", "verify", "examples", "run")
KEYS = {"ring": {"blocks", "p"}, "module": {"shifts", "relations"},
        "tasks": {"commands", "box", "tmax", "seed"}}


class ProblemError(ValueError):
    def __init__(self, msg: str, line: int, column: int = 1):
        super().__init__("line %d, column %d: %s" % (line, column, msg))
        self.line = line
        self.column = column


@dataclass
class ProblemFile:
    ring: RingSpec
    module: Presentation
    commands: list = field(default_factory=list)
    box: Box | None = None
    t_max: int = DEFAULT_TMAX
    seed: int = 0


def _logical_lines(text: str):
    """Yield (line number, column offset, text) with continuations joined.

    Continuation text is glued with a space; columns refer to the first
    physical line, which is where nearly all errors point anyway.
    """
    cur = None
    for no, raw in enumerate(text.splitlines(), 1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        if body[0] in " \t" and cur is not None:
            cur[2] += " " + body.strip()
            continue
        if cur is not None:
            yield tuple(cur)
        cur = [no, 0, body.rstrip()]
    if cur is not None:
        yield tuple(cur)


def _strip_comment(raw: str) -> str:
    inside = False
    for i, ch in enumerate(raw):
        if ch == '"':
            inside = not inside
        elif ch == "#" and not inside:
            return raw[:i]
    return raw


def _parse_pairs(body: str, start: int, line: int, allowed: set) -> dict:
    dec = json.JSONDecoder()
    out: dict = {}
    pos = start
    n = len(body)
    while True:
        while pos < n and body[pos] in " \t":
            pos += 1
        if pos >= n:
            return out
        eq = body.find("=", pos)
        if eq < 0:
            raise ProblemError("expected name=value", line, pos + 1)
        name = body[pos:eq].strip()
        if not name.isidentifier():
            raise ProblemError("bad parameter name %r" % name, line, pos + 1)
        if name not in allowed:
            raise ProblemError("unknown parameter %r" % name, line, pos + 1)
        if name in out:
            raise ProblemError("duplicate parameter %r" % name, line, pos + 1)
        try:
            value, end = dec.raw_decode(body, eq + 1)
        except json.JSONDecodeError as e:
            raise ProblemError("bad value for %r: %s" % (name, e.msg), line, e.pos + 1) from None
        out[name] = (value, eq + 2)
        pos = end


def _int_list(v, line, col, what):
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ProblemError("%s must be a list of integers" % what, line, col)
    return [int(x) for x in v]


def parse_problem(text: str) -> ProblemFile:
    seen: dict = {}
    texts: dict = {}
    for line, _, body in _logical_lines(text):
        colon = body.find(":")
        key = body[:colon].strip() if colon >= 0 else body.strip()
        if colon < 0 or key not in KEYS:
            raise ProblemError("unknown key %r" % key, line, 1)
        if key in seen:
            raise ProblemError("duplicate key %r" % key, line, 1)
        seen[key] = (line, _parse_pairs(body, colon + 1, line, KEYS[key]))
        texts[key] = body
    if "ring" not in seen:
        raise ProblemError("missing ring line", 1, 1)

    line, ring_kv = seen["ring"]
    if "blocks" not in ring_kv:
        raise ProblemError("ring needs blocks=[...]", line, 1)
    blocks = _int_list(ring_kv["blocks"][0], line, ring_kv["blocks"][1], "blocks")
    prime = ring_kv.get("p", (DEFAULT_PRIME, 1))
    try:
        ring = RingSpec(tuple(blocks), int(prime[0]))
    except (ValueError, TypeError) as e:
        raise ProblemError(str(e), line, ring_kv["blocks"][1]) from None

    line, mod_kv = seen.get("module", (line, {}))
    shifts_v, shifts_col = mod_kv.get("shifts", ([[0] * ring.k], 1))
    if not isinstance(shifts_v, list) or not shifts_v and mod_kv.get("relations"):
        raise ProblemError("shifts must be a list of degree vectors", line, shifts_col)
    shifts = []
    for s in shifts_v:
        s = _int_list(s, line, shifts_col, "shift")
        if len(s) != ring.k:
            raise ProblemError("shift %s has %d entries, ring has %d blocks" % (s, len(s), ring.k),
                               line, shifts_col)
        shifts.append(tuple(s))
    F = FreeMod(ring, shifts)
    rels_v, rels_col = mod_kv.get("relations", ([], 1))
    if not isinstance(rels_v, list):
        raise ProblemError("relations must be a list", line, rels_col)
    rels = []
    for j, rel in enumerate(rels_v):
        comps = [rel] if isinstance(rel, str) else rel
        if not isinstance(comps, list) or not all(isinstance(c, str) for c in comps):
            raise ProblemError("relation %d must be a string or a list of strings" % (j + 1), line, rels_col)
        if len(comps) != F.rank:
            raise ProblemError("relation %d has %d components, module has rank %d"
                               % (j + 1, len(comps), F.rank), line, rels_col)
        v = {}
        for r, c in enumerate(comps):
            try:
                poly = parse_poly(ring, c)
            except PolySyntaxError as e:
                at = texts.get("module", "").find(json.dumps(c), rels_col - 1)
                col = at + 1 + e.column if at >= 0 else rels_col
                raise ProblemError("relation %d: %s" % (j + 1, e), line, col) from None
            for m, x in poly.terms.items():
                v[(r, m)] = x
        if v and not is_homogeneous(F, v):
            raise ProblemError("relation %d is inhomogeneous" % (j + 1), line, rels_col)
        rels.append(v)
    prob = ProblemFile(ring, Presentation(F, rels))

    if "tasks" in seen:
        line, kv = seen["tasks"]
        if "commands" in kv:
            cmds, col = kv["commands"]
            if not isinstance(cmds, list) or any(c not in COMMANDS or c in ("run", "examples") for c in cmds):
                raise ProblemError("commands must list names from %s" % ", ".join(COMMANDS[:7]), line, col)
            prob.commands = list(cmds)
        if "box" in kv:
            v, col = kv["box"]
            try:
                lo, hi = v
                prob.box = Box(tuple(_int_list(lo, line, col, "box corner")),
                               tuple(_int_list(hi, line, col, "box corner")))
            except (ValueError, TypeError) as e:
                raise ProblemError("bad box: %s" % e, line, col) from None
            if prob.box.k != ring.k:
                raise ProblemError("box has %d coordinates, ring has %d blocks" % (prob.box.k, ring.k), line, col)
        for name, attr in (("tmax", "t_max"), ("seed", "seed")):
            if name in kv:
                v, col = kv[name]
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise ProblemError("%s must be a nonnegative integer" % name, line, col)
                setattr(prob, attr, v)
    return prob


def parse_box(text: str, k: int) -> Box:
    """``lo1,lo2:hi1,hi2``, or ``lo:hi`` / ``lo,hi`` for a cube."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            lo = tuple(int(x) for x in lo.split(","))
            hi = tuple(int(x) for x in hi.split(","))
            if len(lo) == 1 and len(hi) == 1:
                return Box.cube(lo[0], hi[0], k)
        else:
            lo, hi = (int(x) for x in text.split(","))
            return Box.cube(lo, hi, k)
    except ValueError:
        raise ValueError("cannot read box %r" % text) from None
    if len(lo) != k or len(hi) != k:
        raise ValueError("box needs %d coordinates per corner" % k)
    return Box(lo, hi)


# ------------------------------------------------------------------ commands

def _default_box(prob: ProblemFile) -> Box:
    return prob.box or Box.cube(-3, 3, prob.ring.k)


def cmd_resolve(prob, opts) -> dict:
    R = free_resolution(prob.module)
    return {"ranks": R.ranks(), "shifts": [[list(s) for s in G.shifts] for G in R.modules],
            "minimal": R.minimal}


def cmd_betti(prob, opts) -> dict:
    R = free_resolution(prob.module)
    return {"betti": betti_table(R).to_json(), "proj_dim": proj_dim(R)}


def cmd_resreg(prob, opts) -> dict:
    R = free_resolution(prob.module)
    rr = res_reg_vector(R)
    return {"res_reg": None if rr is None else list(rr), "proj_dim": proj_dim(R),
            "purely_increasing": is_purely_increasing(R) if rr is not None else None}


def _num(x):
    return "-inf" if x is None else x


def cmd_avector(prob, opts) -> dict:
    F = prob.module
    comps = a_star_components(F)
    out = {"a_star": [_num(x) for x in a_star_vector(F)],
           "components": {"%d,%d" % (l + 1, i): _num(v) for (l, i), v in sorted(comps.items())}}
    if prob.ring.k > 1 and F.target.rank:
        out["fiber"] = [fiber_a_bounds(F, l, seed=opts.seed, t_max=opts.tmax).to_json()
                        for l in range(prob.ring.k)]
    return out


def _ideal(ring, spec: str):
    if spec == "B":
        return irrelevant_ideal(ring), "B"
    if spec == "M":
        return maximal_ideal(ring), "M"
    try:
        I, J = spec.split("/")
        I = [int(x) - 1 for x in I.split(",") if x]
        J = [int(x) - 1 for x in J.split(",") if x]
    except ValueError:
        raise ValueError("ideal must be B, M or I/J such as 1/2") from None
    return ideal_family(ring, I, J), ideal_label(I, J, ring.k)


def cmd_coh(prob, opts) -> dict:
    U, label = _ideal(prob.ring, opts.ideal)
    table = CohTable()
    for n in opts.box_obj:
        res = local_cohomology_all(prob.module, U, n, opts.tmax)
        for i, d in enumerate(res.dims):
            if d:
                table.add(label, i, n, d, res.t_used)
    return {"ideal": label, "nonzero": table.to_json(),
            "box": {"lo": list(opts.box_obj.lo), "hi": list(opts.box_obj.hi)}}


def cmd_grid(prob, opts) -> dict:
    g = reg_grid(prob.module, opts.box_obj, opts.tmax)
    out = g.to_json()
    out["ascii"] = g.ascii()
    out["unverified"] = sum(1 for c in g.cells.values() if c.status == UNVERIFIED)
    return out


def cmd_verify(prob, opts) -> dict:
    ids = [opts.theorem] if opts.theorem else list(THEOREMS)
    return {"reports": [verify_theorem(t, prob.module, opts.box_obj, opts.tmax, opts.seed).to_json()
                        for t in ids]}


HANDLERS = {"resolve": cmd_resolve, "betti": cmd_betti, "resreg": cmd_resreg, "avector": cmd_avector,
            "coh": cmd_coh, "grid": cmd_grid, "verify": cmd_verify}


# ------------------------------------------------------------------ example suite

def bundled_problem(name: str) -> str:
    return resources.files("mgreg").joinpath("data", name).read_text()


def example_suite(t_max: int = DEFAULT_TMAX) -> list[dict]:
    rows = []

    def record(name, ok, detail):
        rows.append({"check": name, "status": "PASS" if ok else "FAIL", "detail": detail})

    P11, P12 = RingSpec((2, 2)), RingSpec((2, 3))
    S = Presentation.free(P11, [(0, 0)])

    a = a_star_vector(Presentation.free(P12, [(0, 0)]))
    record("a-vector of S on P1xP2", a == (-2, -3), {"a_star": list(a)})

    box = Box.cube(-3, 3, 2)
    d = P11.dvec
    zero = all(hb_piece(S, i, n, t_max) == 0 for n in box if geq(n, (-1, -1)) for i in range(4))
    wit = []
    for l in range(2):
        lo = tuple(-d[j] + 1 - (1 if j == l else 0) for j in range(2))
        hit = next((list(n) for n in box if geq(n, lo)
                    and any(hb_piece(S, i, n, t_max) for i in range(4))), None)
        wit.append(hit)
    record("a_B region of S is -d + N^2", zero and all(wit), {"witnesses": wit})

    g = reg_grid(S, Box.cube(-2, 2, 2), t_max)
    members = g.members()
    want = [m for m in Box.cube(-2, 2, 2) if geq(m, (0, 0))]
    record("reg_B(S) is N^2 on [-2,2]^2", members == sorted(want), {"members": len(members)})

    T = Presentation.free(P11, [(1, 2)])
    g = reg_grid(T, Box.cube(-2, 2, 2), t_max)
    want = [m for m in Box.cube(-2, 2, 2) if geq(m, (1, 2))]
    record("reg_B(S(-1,-2)) is (1,2) + N^2", g.members() == sorted(want),
           {"members": [list(m) for m in g.members()]})

    prob = parse_problem(bundled_problem("resnotinreg.mgr"))
    F = prob.module
    R = free_resolution(F)
    rr = res_reg_vector(R)
    record("Koszul module res-reg", rr == (0, 0), {"res_reg": list(rr)})
    box = Box.cube(0, 3, 2)
    g = reg_grid(F, box, t_max)
    cell = g.cells[(0, 0)]
    record("(0,0) is not in reg_B", cell.status == NONMEMBER, cell.to_json())
    idx = witness_indices(F, (0, 0), box, t_max)
    N = P11.dim_x
    record("witness index at (0,0)", bool(set(idx) & {N - 1, N}), {"indices": idx, "N": N})
    members = set(g.members())
    positive = {m for m in box if geq(m, (0, 0))}
    record("reg_B strictly inside res-reg + N^2", members < positive,
           {"members": [list(m) for m in sorted(members)]})

    for label, polys, rows_ in (("x1*y1, x2*y2", ["x1*y1", "x2*y2"], [(1, 1), (1, 1)]),
                                ("x1^2*y1 + x2^2*y2", ["x1^2*y1 + x2^2*y2"], [(2, 1)])):
        rr = res_reg_vector(free_resolution(quotient_ring(P11, polys)))
        dv = ci_d_vector(rows_)
        record("complete intersection %s" % label, rr == dv, {"res_reg": list(rr), "formula": list(dv)})
    return rows


# ------------------------------------------------------------------ driver

def _render_text(command: str, rep: dict) -> str:
    lines = ["# %s  p=%s" % (command, rep["prime"])]
    body = rep["result"]
    if command == "grid":
        lines.append(body["ascii"])
        lines.append("# = Member, . = NonMember, ? = Unverified")
        for c in body["cells"]:
            if c["status"] == NONMEMBER:
                w = c["witness"]
                lines.append("%s: H^%d nonzero at %s" % (c["m"], w["i"], w["degree"]))
        if body["inner_violations"]:
            lines.append("inner region points not Member: %s" % body["inner_violations"])
    elif command == "verify":
        for r in body["reports"]:
            c = r["counts"]
            lines.append("%-16s pass=%d fail=%d unverified=%d" % (r["theorem"], c["pass"], c["fail"], c["unverified"]))
    elif command == "examples":
        for r in body["rows"]:
            lines.append("%s %s %s" % (r["status"], r["check"], json.dumps(r["detail"], sort_keys=True)))
        lines.append("score %d/%d" % (sum(r["status"] == "PASS" for r in body["rows"]), len(body["rows"])))
    else:
        for key in sorted(body):
            lines.append("%s: %s" % (key, json.dumps(body[key], sort_keys=True)))
    return "\n".join(lines) + "\n"


def _exit_code(command: str, body: dict, strict: bool) -> int:
    if command == "verify":
        counts = [r["counts"] for r in body["reports"]]
        if any(c["fail"] for c in counts):
            return 1
        if strict and any(c["unverified"] for c in counts):
            return 2
    if command == "grid" and strict and body["unverified"]:
        return 2
    if command == "examples" and any(r["status"] == "FAIL" for r in body["rows"]):
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mgreg", description="Multigraded regularity computations over F_p.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", nargs="?", help="problem file ('-' for stdin)")
    ap.add_argument("--box", help="lo1,lo2:hi1,hi2 or lo,hi for a cube")
    ap.add_argument("--tmax", type=int)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--prime", type=int)
    ap.add_argument("--ideal", default="B", help="B, M or I/J (1-based blocks), for coh")
    ap.add_argument("--theorem", choices=THEOREMS, help="single theorem for verify")
    ap.add_argument("--strict", action="store_true", help="exit 2 when anything is Unverified")
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--out")
    return ap


def _load(path: str | None, prime: int | None) -> ProblemFile:
    if path is None:
        raise ValueError("this command needs a problem file")
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    prob = parse_problem(text)
    if prime is not None and prime != prob.ring.prime:
        prob = parse_problem(_with_prime(text, prime))
    return prob


def _with_prime(text: str, prime: int) -> str:
    out = []
    for raw in text.splitlines():
        if raw.lstrip().startswith("ring:"):
            body = raw.split("#", 1)[0]
            if " p=" in body:
                body = body[:body.index(" p=")] + body[body.index(" p=") + 3:].lstrip("0123456789")
            raw = body.rstrip() + " p=%d" % prime
        out.append(raw)
    return "\n".join(out)


def run(command: str, prob: ProblemFile | None, opts) -> dict:
    if command == "examples":
        prime = DEFAULT_PRIME
        body = {"rows": example_suite(opts.tmax)}
    else:
        prime = prob.ring.prime
        body = HANDLERS[command](prob, opts)
    return {"command": command, "prime": prime, "t_max": opts.tmax, "result": body}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        prob = None if args.command == "examples" else _load(args.problem, args.prime)
        if args.tmax is None:
            args.tmax = prob.t_max if prob else DEFAULT_TMAX
        if args.seed is None:
            args.seed = prob.seed if prob else 0
        if prob is not None:
            args.box_obj = parse_box(args.box, prob.ring.k) if args.box else _default_box(prob)
        commands = prob.commands if args.command == "run" else [args.command]
        if args.command == "run" and not commands:
            raise ValueError("problem file lists no commands")
        texts, reports, code = [], [], 0
        for c in commands:
            rep = run(c, prob, args)
            reports.append(rep)
            texts.append(_render_text(c, rep))
            code = max(code, _exit_code(c, rep["result"], args.strict))
        if args.json:
            payload = reports[0] if len(reports) == 1 else reports
            text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
        else:
            text = "".join(texts)
    except (ProblemError, ValueError, OSError, NotStabilized) as e:
        print("mgreg: error: %s" % e, file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
