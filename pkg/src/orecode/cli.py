"""Command-line entry point ``orecode``.

Exit codes: 0 success, 1 internal failure or reference mismatch, 2 invalid
input, 3 cap exceeded. ``--json`` output carries ``"schema": 1`` and sorted
keys, so identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bd
from . import equiv as eq
from ._kernels import backend
from .caps import get_cap
from .codes import (SkewCode, hamming_weight, min_distance, rank_weight, rank_singleton_bound,
                    singleton_check)
from .errors import InvalidArgument, OrecodeError, ParseError
from .field import FieldAutomorphism, SubfieldEmbedding, parse_field_spec
from .frame import ExtensionFrame, representative_set
from .skew import (SkewRing, evaluate_by_division, evaluate_right, gcrd_extended, is_central,
                   is_invariant, lclm, right_divmod, left_divmod, right_exponent)

SCHEMA = 1


class Context:
    """Parsed global flags: field, automorphism, output mode."""

    def __init__(self, args):
        self.args = args
        self.json = args.json
        self._field = None

    @property
    def field(self):
        if self._field is None:
            self._field = parse_field_spec(self.args.field)
        return self._field

    @property
    def aut(self) -> FieldAutomorphism:
        F = self.field
        r = self.args.sigma
        if r is None:
            r = 1 if F.s > 1 else 0
        return FieldAutomorphism(F, r)

    @property
    def ring(self) -> SkewRing:
        return SkewRing(self.aut)

    def poly(self, text: str):
        return self.ring.parse(text)

    def element(self, text: str) -> int:
        return self.field.parse_element(text)

    def subfield(self, sub_q: int | None) -> SubfieldEmbedding:
        if sub_q is None:
            return self.aut.fixed_subfield()
        F = self.field
        for t in range(1, F.s + 1):
            if F.s % t == 0 and F.p ** t == sub_q:
                return SubfieldEmbedding(F, t)
        raise InvalidArgument(f"GF({sub_q}) is not a subfield of GF({F.q})")


def _emit(ctx: Context, payload: dict, text: str) -> None:
    if ctx.json:
        out = dict(payload)
        out["schema"] = SCHEMA
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(text)


def _parse_vector(ctx: Context, text: str) -> list[int]:
    return [ctx.element(t) for t in text.split(",") if t.strip() != ""]


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise ParseError(f"bad integer list {text!r}")


def _frame(ctx: Context, desc: str | None, e_default: int | None = None) -> ExtensionFrame:
    """--frame 'e=12 big-mod=1,1,0,... embed=0 alpha=g^5'."""
    opts = {}
    for part in (desc or "").split():
        key, sep, value = part.partition("=")
        if not sep:
            raise ParseError(f"bad frame descriptor item {part!r}")
        opts[key] = value
    unknown = set(opts) - {"e", "big-mod", "embed", "alpha"}
    if unknown:
        raise ParseError(f"unknown frame keys {sorted(unknown)}")
    if "e" not in opts and e_default is None:
        raise InvalidArgument("frame descriptor needs e=<int>")
    e = int(opts.get("e", e_default))
    big_mod = _parse_ints(opts["big-mod"]) if "big-mod" in opts else None
    embed = int(opts["embed"]) if "embed" in opts else None
    frame = ExtensionFrame(ctx.aut, e, big_mod, embed)
    if "alpha" in opts:
        alpha = frame.big_field.parse_element(opts["alpha"])
        frame = ExtensionFrame(ctx.aut, e, big_mod, embed, alpha)
    return frame


# -- field / poly ---------------------------------------------------------------

def cmd_field(ctx: Context) -> int:
    F, aut = ctx.field, ctx.aut
    sub = aut.fixed_subfield()
    payload = {"p": F.p, "s": F.s, "q": F.q, "modulus": list(F.modulus), "primitive": F.primitive,
               "sigma_power": aut.r, "mu": aut.mu, "q0": aut.q0, "fixed_subfield": sub.sub_q,
               "backend": backend()}
    lines = [f"GF({F.q}) = GF({F.p}^{F.s}), modulus {list(F.modulus)}",
             f"sigma = Frobenius^{aut.r}, order mu = {aut.mu}, fixed subfield GF({aut.q0})",
             f"kernel backend: {backend()}"]
    if ctx.args.element is not None:
        a = ctx.element(ctx.args.element)
        i = ctx.args.norm_index
        v = aut.norm(a, i)
        payload["norm"] = {"element": F.format_element(a), "i": i, "value": F.format_element(v)}
        lines.append(f"N_{i}({F.format_element(a)}) = {F.format_element(v)}")
    _emit(ctx, payload, "\n".join(lines))
    return 0


def cmd_poly(ctx: Context) -> int:
    a = ctx.args
    op = a.poly_cmd
    if op == "mul":
        f, g = ctx.poly(a.a), ctx.poly(a.b)
        h = f * g
        _emit(ctx, {"product": str(h)}, str(h))
    elif op == "div":
        f, g = ctx.poly(a.a), ctx.poly(a.b)
        q, r = (right_divmod if a.side == "right" else left_divmod)(f, g)
        _emit(ctx, {"quotient": str(q), "remainder": str(r), "side": a.side},
              f"quotient: {q}\nremainder: {r}")
    elif op == "gcrd":
        f, g = ctx.poly(a.a), ctx.poly(a.b)
        d, u, v = gcrd_extended(f, g)
        _emit(ctx, {"gcrd": str(d), "u": str(u), "v": str(v)}, str(d))
    elif op == "lclm":
        f, g = ctx.poly(a.a), ctx.poly(a.b)
        m = lclm(f, g)
        _emit(ctx, {"lclm": str(m)}, str(m))
    elif op == "eval":
        f = ctx.poly(a.poly)
        x = ctx.element(a.at)
        v1, v2 = evaluate_right(f, x), evaluate_by_division(f, x)
        if v1 != v2:
            raise OrecodeError("evaluation routes disagree")
        s = ctx.field.format_element(v1)
        _emit(ctx, {"value": s}, s)
    elif op == "exponent":
        f = ctx.poly(a.poly)
        e = right_exponent(f, a.cap)
        _emit(ctx, {"exponent": e}, str(e))
    elif op == "central":
        f = ctx.poly(a.poly)
        c, inv = is_central(f), is_invariant(f)
        _emit(ctx, {"central": c, "invariant": inv}, f"central: {c}\ninvariant: {inv}")
    return 0


# -- frame ----------------------------------------------------------------------------

def cmd_frame(ctx: Context) -> int:
    a = ctx.args
    e_default = right_exponent(ctx.poly(a.poly)) if a.poly else None
    frame = _frame(ctx, a.frame, e_default)
    B = frame.big_field
    if a.frame_cmd == "build":
        info = frame.describe()
        _emit(ctx, info, "\n".join(f"{k}: {v}" for k, v in sorted(info.items())))
    elif a.frame_cmd == "roots":
        roots = [B.format_element(b) for b in frame.roots]
        _emit(ctx, {"roots": roots, "e": frame.e},
              "\n".join(f"theta^{i}(beta) = {r}" for i, r in enumerate(roots)))
    elif a.frame_cmd == "orbits":
        indices = range(len(frame.embeddings)) if a.scan_embeddings else [frame.embed_index]
        rows = []
        for idx in indices:
            fr = frame if idx == frame.embed_index else \
                ExtensionFrame(ctx.aut, frame.e, list(B.modulus), idx, frame.alpha)
            rows.append({"embedding": idx, "root": B.format_element(fr.rho),
                         "orbits": [str(fr.orbit_min_poly(i)) for i in range(fr.mu)]})
        text = "\n".join(f"embedding {r['embedding']} ({r['root']}):\n  " + "\n  ".join(r["orbits"])
                         for r in rows)
        _emit(ctx, {"embeddings": rows}, text)
    return 0


# -- code -----------------------------------------------------------------------------

def _code(ctx: Context) -> SkewCode:
    a = ctx.args
    if a.tset is not None:
        frame = _frame(ctx, a.frame)
        g = frame.generator_from_defining_set(_parse_ints(a.tset))
        f = ctx.poly(a.modulus) if a.modulus else ctx.ring.binomial(frame.e, 1)
    else:
        if not a.modulus or not a.gen:
            raise InvalidArgument("need --modulus and --gen (or --frame and --tset)")
        f, g = ctx.poly(a.modulus), ctx.poly(a.gen)
    return SkewCode(f, g)


def cmd_code(ctx: Context) -> int:
    a = ctx.args
    code = _code(ctx)
    F = code.field
    if a.code_cmd == "build":
        _emit(ctx, {"n": code.n, "k": code.k, "modulus": str(code.f), "generator": str(code.g)},
              f"[{code.n}, {code.k}] code, modulus {code.f}, generator {code.g}")
    elif a.code_cmd == "gm":
        G = [[F.format_element(c) for c in row] for row in code.generator_matrix()]
        _emit(ctx, {"generator_matrix": G}, "\n".join(" ".join(f"{c:>5}" for c in row) for row in G))
    elif a.code_cmd == "shift":
        v = _parse_vector(ctx, a.vector)
        w = [F.format_element(c) for c in code.polycyclic_shift(v)]
        _emit(ctx, {"shifted": w}, ",".join(w))
    elif a.code_cmd == "dmin":
        emb = ctx.subfield(a.sub) if a.metric == "rank" else None
        count = code.normalized_count()
        if a.deep:
            print(f"advisory: exhaustive scan over {count} normalized codewords "
                  f"({backend()} backend); this can take minutes", file=sys.stderr)
        rep = min_distance(code, a.metric, emb, deep=a.deep, method=a.method)
        payload = {"n": code.n, "k": code.k, "d": rep.d,
                   "witness": [F.format_element(c) for c in rep.witness],
                   "exhaustive": rep.exhaustive, "method": rep.method, "metric": rep.metric}
        if emb is not None:
            payload["singleton_like_max"] = rank_singleton_bound(code.n, code.k, emb.degree)
            payload["mrd"] = singleton_check(code, code.n - code.k + 1, rep.d, emb)[1]
        else:
            payload["mds"] = singleton_check(code, rep.d)[0]
        _emit(ctx, payload, f"d = {rep.d} ({rep.metric}, {rep.method})\n"
                            f"witness: {','.join(payload['witness'])}")
    elif a.code_cmd == "weight":
        v = _parse_vector(ctx, a.vector)
        emb = ctx.subfield(a.sub)
        payload = {"member": code.contains(v), "hamming": hamming_weight(v),
                   "rank": rank_weight(v, emb)}
        _emit(ctx, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return 0


# -- bound ----------------------------------------------------------------------------

def cmd_bound(ctx: Context) -> int:
    a = ctx.args
    T = _parse_ints(a.tset)
    e = a.e
    op = a.bound_cmd
    if op == "bch":
        certs = {"strict": bd.bch_search(T, e)}
    elif op == "ht":
        certs = {"strict": bd.ht_search(T, e, a.rmax)}
    elif op == "roos":
        modes = bd.MODES if a.mode == "both" else (a.mode,)
        certs = {m: bd.roos_search(T, e, a.rmax, m, a.mu) for m in modes}
    elif op == "search":
        modes = bd.MODES if a.mode == "both" else (a.mode,)
        certs = {m: bd.search(T, e, a.rmax, m, a.mu) for m in modes}
    else:  # mrd
        frame = _frame(ctx, a.frame, e)
        cert = bd.search(T, frame.e, a.rmax, "strict")
        ok = bd.mrd_designed_check(T, cert, frame)
        s_t = sorted(representative_set(T, frame.mu, frame.e))
        _emit(ctx, {"certificate": cert.as_dict(), "S_T": s_t, "designed_mrd": ok},
              f"{cert.kind} value {cert.value}, |S_T| = {len(s_t)}, designed MRD: {ok}")
        return 0
    payload = {m: c.as_dict() for m, c in certs.items()}
    text = "\n".join(f"{m}: {c.kind} value {c.value} (a={c.a}, b={c.b}, delta={c.delta}, "
                     f"offsets={list(c.offsets)})" for m, c in certs.items())
    _emit(ctx, {"certificates": payload}, text)
    return 0


# -- equiv ----------------------------------------------------------------------------

def _metric(ctx: Context, text: str) -> SubfieldEmbedding | None:
    if text == "hamming":
        return None
    if text == "rank":
        return ctx.aut.fixed_subfield()
    if text.startswith("rank:"):
        try:
            return ctx.subfield(int(text[5:]))
        except ValueError:
            raise ParseError(f"bad metric {text!r}")
    raise ParseError(f"bad metric {text!r}")


def _shape(ctx: Context, text: str, kind: str):
    f = ctx.poly(text)
    return eq.TrinomialShape.from_poly(f) if kind == "trinomial" else eq.PolyShape.from_poly(f)


def cmd_equiv(ctx: Context) -> int:
    a = ctx.args
    F, aut = ctx.field, ctx.aut
    emb = _metric(ctx, a.metric)
    op = a.equiv_cmd
    if op == "test":
        src, dst = _shape(ctx, a.src, a.kind), _shape(ctx, a.dst, a.kind)
        try:
            if a.kind == "trinomial" and emb is None:
                w = eq.trinomial_hamming_witness(src, dst, aut)
            elif a.kind == "trinomial":
                w = eq.trinomial_rank_witness(src, dst, aut, emb)
            else:
                w = eq.general_hamming_witness(src, dst, aut, emb)
            reason = "witness" if w else "no witness"
        except eq.SupportMismatch:
            w, reason = None, "different support"
        alpha = w.alpha_text(F) if w else None
        _emit(ctx, {"equivalent": w is not None, "alpha": alpha, "reason": reason},
              f"equivalent: {w is not None} ({reason})" + (f", alpha = {alpha}" if w else ""))
    elif op in ("count", "reps"):
        if a.support is not None:
            support = _parse_ints(a.support)
            count = eq.count_general_classes(a.n, support, aut, emb)
            _emit(ctx, {"class_count": count}, str(count))
            return 0
        if a.l is None:
            raise InvalidArgument("need --l (or --support)")
        if emb is None:
            count = eq.count_hamming_classes(a.n, a.l, aut, central=a.central)
        else:
            count = eq.count_rank_classes(a.n, a.l, aut, emb)
        if op == "count":
            _emit(ctx, {"class_count": count}, str(count))
        else:
            reps = eq.hamming_representatives(a.n, a.l, aut) if emb is None \
                else eq.rank_representatives(a.n, a.l, aut, emb)
            texts = [r.format(F) for r in reps]
            _emit(ctx, {"class_count": count, "representatives": texts}, "\n".join(texts))
    elif op == "classify":
        src = _shape(ctx, a.src, "trinomial")
        rep, w = eq.classify(src, aut, emb)
        _emit(ctx, {"representative": rep.format(F), "alpha": w.alpha_text(F), "equivalent": True},
              f"{rep.format(F)} (alpha = {w.alpha_text(F)})")
    elif op == "transport":
        src, dst = _shape(ctx, a.src, "general"), _shape(ctx, a.dst, "general")
        w = eq.general_hamming_witness(src, dst, aut, emb)
        if w is None:
            _emit(ctx, {"equivalent": False, "alpha": None}, "no witness")
            return 0
        code = SkewCode(dst.modulus(ctx.ring), ctx.poly(a.gen))
        image = eq.transport_code(code, w, aut)
        _emit(ctx, {"equivalent": True, "alpha": w.alpha_text(F), "generator": str(image.g),
                    "modulus": str(image.f)},
              f"alpha = {w.alpha_text(F)}\ngenerator: {image.g}")
    return 0


# -- reference driver -----------------------------------------------------------------------

def cmd_reproduce(ctx: Context) -> int:
    from .reference import run_checks

    if ctx.args.deep:
        print("advisory: exhaustive distance scans over about 1.09e9 normalized codewords; "
              f"expect minutes ({backend()} backend)", file=sys.stderr)
    progress = None if ctx.json else (lambda item: print(item.line(), flush=True))
    items = run_checks(deep=ctx.args.deep, progress=progress)
    failed = [i for i in items if not i.passed]
    if ctx.json:
        out = {"items": [{"name": i.name, "passed": i.passed, "expected": repr(i.expected),
                          "actual": repr(i.actual)} for i in items],
               "passed": len(items) - len(failed), "failed": len(failed), "schema": SCHEMA}
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(f"{len(items) - len(failed)} passed, {len(failed)} failed")
    return 1 if failed else 0


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted at every level; defaults are filled in after parsing
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--field", help="p^s [mod=c0,...,cs] (default 2^2)")
    common.add_argument("--sigma", type=int, help="sigma = Frobenius^r (default 1, or 0 over a prime field)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, help="accepted; searches run sequentially")
    common.add_argument("--seed", type=int)

    p = argparse.ArgumentParser(prog="orecode", parents=[common],
                                description="Skew polynomial rings, skew polycyclic codes, "
                                            "distance bounds and equivalence classes.")
    sub = p.add_subparsers(dest="cmd", required=True)

    f = sub.add_parser("field", parents=[common], help="field and automorphism summary")
    f.add_argument("--element")
    f.add_argument("--norm-index", type=int, default=1)

    pp = sub.add_parser("poly", parents=[common], help="skew polynomial arithmetic")
    ps = pp.add_subparsers(dest="poly_cmd", required=True)
    for name in ("mul", "div", "gcrd", "lclm"):
        q = ps.add_parser(name, parents=[common])
        q.add_argument("--a", required=True)
        q.add_argument("--b", required=True)
        if name == "div":
            q.add_argument("--side", choices=("right", "left"), default="right")
    q = ps.add_parser("eval", parents=[common])
    q.add_argument("--poly", required=True)
    q.add_argument("--at", required=True)
    q = ps.add_parser("exponent", parents=[common])
    q.add_argument("--poly", required=True)
    q.add_argument("--cap", type=int, default=None)
    q = ps.add_parser("central", parents=[common])
    q.add_argument("--poly", required=True)

    fp = sub.add_parser("frame", parents=[common], help="extension frames")
    fs = fp.add_subparsers(dest="frame_cmd", required=True)
    for name in ("build", "roots", "orbits"):
        q = fs.add_parser(name, parents=[common])
        q.add_argument("--frame", default=None, help="'e=<int> [big-mod=c0,...] [embed=i] [alpha=g^k]'")
        q.add_argument("--poly", default=None, help="take e as the right exponent of this polynomial")
        if name == "orbits":
            q.add_argument("--scan-embeddings", action="store_true")

    cp = sub.add_parser("code", parents=[common], help="skew polycyclic codes")
    cs = cp.add_subparsers(dest="code_cmd", required=True)
    for name in ("build", "gm", "dmin", "shift", "weight"):
        q = cs.add_parser(name, parents=[common])
        q.add_argument("--modulus")
        q.add_argument("--gen")
        q.add_argument("--frame")
        q.add_argument("--tset")
        if name == "dmin":
            q.add_argument("--metric", choices=("hamming", "rank"), default="hamming")
            q.add_argument("--sub", type=int, default=None, help="subfield size q' (default fixed field)")
            q.add_argument("--deep", action="store_true")
            q.add_argument("--method", choices=("auto", "exhaustive", "structured"), default="auto")
        if name in ("shift", "weight"):
            q.add_argument("--vector", required=True)
        if name == "weight":
            q.add_argument("--sub", type=int, default=None)

    bp = sub.add_parser("bound", parents=[common], help="designed-distance certificates")
    bs = bp.add_subparsers(dest="bound_cmd", required=True)
    for name in ("bch", "ht", "roos", "search", "mrd"):
        q = bs.add_parser(name, parents=[common])
        q.add_argument("--tset", required=True)
        q.add_argument("--e", type=int, required=name != "mrd")
        q.add_argument("--rmax", type=int, default=3)
        q.add_argument("--mu", type=int, default=None, help="period for lenient Roos (default: of T)")
        if name in ("roos", "search"):
            q.add_argument("--mode", choices=("strict", "lenient", "both"), default="strict")
        if name == "mrd":
            q.add_argument("--frame", default=None)

    ep = sub.add_parser("equiv", parents=[common], help="equivalence of skew polycyclic ambients")
    es = ep.add_subparsers(dest="equiv_cmd", required=True)
    for name in ("test", "count", "reps", "classify", "transport"):
        q = es.add_parser(name, parents=[common])
        q.add_argument("--metric", default="hamming", help="hamming | rank | rank:<q'>")
        if name in ("test", "transport"):
            q.add_argument("--src", required=True)
            q.add_argument("--dst", required=True)
        if name == "test":
            q.add_argument("--kind", choices=("trinomial", "general"), default="trinomial")
        if name == "transport":
            q.add_argument("--gen", required=True, help="generator of a code over --dst")
        if name in ("count", "reps"):
            q.add_argument("--n", type=int, required=True)
            q.add_argument("--l", type=int, default=None)
            q.add_argument("--support", default=None, help="general support i_0,...,i_{m-1}")
            q.add_argument("--central", action="store_true", help="two-sided modulus variant")
        if name == "classify":
            q.add_argument("--src", required=True)

    rp = sub.add_parser("reproduce-paper", parents=[common], help="recompute the reference values")
    rp.add_argument("--deep", action="store_true")
    return p


GLOBAL_DEFAULTS = {"field": "2^2", "sigma": None, "json": False, "jobs": 1, "seed": 0}

HANDLERS = {"field": cmd_field, "poly": cmd_poly, "frame": cmd_frame, "code": cmd_code,
            "bound": cmd_bound, "equiv": cmd_equiv, "reproduce-paper": cmd_reproduce}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        get_cap("field")  # validate ORECODE_CAP early
        return HANDLERS[args.cmd](Context(args))
    except OrecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def parse_and_dispatch(argv) -> int:
    return main(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
