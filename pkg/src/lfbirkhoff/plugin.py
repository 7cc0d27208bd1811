"""User-supplied lattices behind a JSON-lines oracle.

Each request is one line ``{"op": ..., "args": [...]}`` and each response
one line ``{"result": ...}``; ``op`` is one of ``leq``, ``meet``, ``join``,
``lower_covers`` and ``upper_covers``.  Elements are arbitrary JSON values
compared only for equality.  Oracles must be pure: answers are cached.

Two transports exist: a long-running subprocess speaking the protocol on
stdin/stdout, and a static file of ``{"op", "args", "result"}`` records.
"""
from __future__ import annotations

import json
import subprocess

from .errors import LatticeError
from .lazylf import LocallyFiniteLattice

OPS = ("leq", "meet", "join", "lower_covers", "upper_covers")


def freeze(v):
    """JSON value -> hashable value (lists become tuples, dicts sorted items)."""
    if isinstance(v, list):
        return tuple(freeze(x) for x in v)
    if isinstance(v, dict):
        return tuple(sorted((k, freeze(x)) for k, x in v.items()))
    return v


def thaw(v):
    if isinstance(v, tuple):
        return [thaw(x) for x in v]
    return v


def _args_key(args):
    return json.dumps([thaw(a) for a in args], sort_keys=True)


class SubprocessOracle:
    def __init__(self, argv):
        self.argv = list(argv)
        self.proc = subprocess.Popen(self.argv, stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                                     text=True, encoding="utf-8")

    def __call__(self, op, args):
        line = json.dumps({"op": op, "args": [thaw(a) for a in args]})
        self.proc.stdin.write(line + "\n")
        self.proc.stdin.flush()
        reply = self.proc.stdout.readline()
        if not reply:
            raise LatticeError(f"plugin {self.argv} closed the pipe on {line}")
        data = json.loads(reply)
        if "error" in data:
            raise LatticeError(f"plugin error on {line}: {data['error']}")
        return data["result"]

    def close(self):
        if self.proc.poll() is None:
            self.proc.stdin.close()
            self.proc.wait(timeout=5)


class StaticOracle:
    def __init__(self, path):
        self.table = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    rec = json.loads(line)
                    self.table[(rec["op"], _args_key(freeze(a) for a in rec["args"]))] = rec["result"]

    def __call__(self, op, args):
        try:
            return self.table[(op, _args_key(args))]
        except KeyError:
            raise LatticeError(f"static plugin has no answer for {op}{[thaw(a) for a in args]}") from None

    def close(self):
        pass


class PluginLattice(LocallyFiniteLattice):
    """Bare oracle lattice: windows, separators-in-window, ranks and the
    descent classifier work; symbolic primes do not exist."""

    def __init__(self, oracle, name="plugin"):
        self.oracle = oracle
        self.name = name
        self._cache = {}

    @classmethod
    def from_command(cls, argv, name="plugin"):
        return cls(SubprocessOracle(argv), name)

    @classmethod
    def from_file(cls, path, name="plugin"):
        return cls(StaticOracle(path), name)

    def _ask(self, op, *args):
        k = (op, args)
        if k not in self._cache:
            self._cache[k] = self.oracle(op, args)
        return self._cache[k]

    def coerce(self, x):
        return freeze(x)

    def encode(self, x):
        return thaw(x)

    def key(self, x):
        return json.dumps(thaw(x), sort_keys=True)

    def leq(self, x, y):
        return bool(self._ask("leq", x, y))

    def meet(self, x, y):
        return freeze(self._ask("meet", x, y))

    def join(self, x, y):
        return freeze(self._ask("join", x, y))

    def lower_covers(self, x):
        return sorted((freeze(c) for c in self._ask("lower_covers", x)), key=self.key)

    def upper_covers(self, x):
        return sorted((freeze(c) for c in self._ask("upper_covers", x)), key=self.key)

    def close(self):
        self.oracle.close()


def serve(L, instream, outstream):
    """Answer protocol requests for a built-in lattice (reference server)."""
    for line in instream:
        if not line.strip():
            continue
        req = json.loads(line)
        try:
            args = [L.coerce(a) for a in req["args"]]
            op = req["op"]
            if op not in OPS:
                raise ValueError(f"unknown op {op}")
            res = getattr(L, op)(*args)
            if op in ("meet", "join"):
                res = L.encode(res)
            elif op.endswith("covers"):
                res = [L.encode(c) for c in res]
            outstream.write(json.dumps({"result": res}) + "\n")
        except Exception as exc:  # reported back over the pipe
            outstream.write(json.dumps({"error": str(exc)}) + "\n")
        outstream.flush()

