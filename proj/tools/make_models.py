#!/usr/bin/env python3
"""Writes the intersection model files in data/models/.

Each model is P3 blown up at points (kind X), then at curves through them
(kind D), then at lines lying on the point divisors (kind G). All triple
products follow from the incidences below; the C++ tests recheck the
aggregates.
"""

import itertools
import pathlib
import sys


class Model:
    def __init__(self, title):
        self.title = title
        self.basis = ["H"]
        self.points = {}    # name -> self-intersection
        self.curves = {}    # name -> (cube, degree, point divisors met)
        self.lines = {}     # name -> (host point divisor, curve divisors met)
        self.table = {}
        self.classes = []
        self.expects = []

    def point(self, name, cube):
        self.basis.append(name)
        self.points[name] = cube

    def curve(self, name, cube, through, degree=1):
        self.basis.append(name)
        self.curves[name] = (cube, degree, list(through))

    def line(self, name, host, meets):
        self.basis.append(name)
        self.lines[name] = (host, list(meets))

    def key(self, *names):
        return tuple(sorted(names, key=self.basis.index))

    def put(self, a, b, c, value, why):
        k = self.key(a, b, c)
        if k in self.table and self.table[k][0] != value:
            raise ValueError(f"conflicting values for {k}")
        self.table[k] = (value, why)

    def kind(self, n):
        if n == "H":
            return "H"
        if n in self.points:
            return "X"
        if n in self.curves:
            return "D"
        return "G"

    def meets(self, a, b):
        if a == b:
            return True
        ka, kb = self.kind(a), self.kind(b)
        if ka > kb:
            a, b, ka, kb = b, a, kb, ka
        if (ka, kb) == ("D", "H"):
            return True
        if (ka, kb) == ("D", "X"):
            return b in self.curves[a][2]
        if (ka, kb) == ("G", "X"):
            return self.lines[a][0] == b
        if (ka, kb) == ("D", "G"):
            return a in self.lines[b][1]
        return False

    def build(self):
        self.put("H", "H", "H", 1, "hyperplane class of P3")
        for x, cube in self.points.items():
            self.put(x, x, x, cube, "restriction to the exceptional surface")
        for d, (cube, degree, through) in self.curves.items():
            self.put(d, d, d, cube, "minus the normal bundle degree of the centre")
            self.put("H", "H", d, 0, "a general line misses the centre")
            self.put("H", d, d, -degree, "a general plane meets the centre in its degree")
            for x in through:
                self.put(x, d, d, -1, "exceptional curve of the point divisor")
                n = sum(1 for g, (h, m) in self.lines.items() if h == x and d in m)
                self.put(x, x, d, -n, "fibre blown up where blown-up lines cross it")
        for g, (host, meets) in self.lines.items():
            self.put(g, g, g, 2, "minus the normal bundle degree, O(-1)+O(-1)")
            self.put(host, host, g, 0, "section of self-intersection zero on P1xP1")
            self.put(host, g, g, -1, "line of self-intersection -1 on the point divisor")
            for d in meets:
                if host not in self.curves[d][2]:
                    raise ValueError(f"{g} meets {d} away from {host}")
                self.put(d, d, g, 0, "fibre of the ruled surface")
                self.put(d, g, g, -1, "curve of self-intersection -1 on the curve divisor")
                self.put(host, d, g, 1, "two curves crossing once on the point divisor")

    def pullback(self, x):
        # Class of the pulled-back point divisor.
        out = {x: 1}
        for g, (h, _) in self.lines.items():
            if h == x:
                out[g] = 1
        return out

    def add_class(self, name, terms):
        self.classes.append((name, {k: v for k, v in terms.items() if v}))

    def expect(self, text):
        self.expects.append(text)

    def write(self, path):
        out = [f"# {self.title}", "", "basis: " + " ".join(self.basis), ""]
        for name, terms in self.classes:
            parts = []
            for n in self.basis:
                c = terms.get(n, 0)
                if c == 0:
                    continue
                sign = "-" if c < 0 else "+"
                mag = "" if abs(c) == 1 else f"{abs(c)} "
                parts.append(f"{sign} {mag}{n}")
            s = " ".join(parts)
            if s.startswith("+ "):
                s = s[2:]
            out.append(f"class {name} = {s}")
        out.append("")
        for a in self.basis:
            far = [b for b in self.basis if not self.meets(a, b) and self.basis.index(b) > self.basis.index(a)]
            if far:
                out.append(f"disjoint {a}: " + " ".join(far))
        out.append("")
        for k in sorted(self.table, key=lambda k: [self.basis.index(n) for n in k]):
            v, why = self.table[k]
            out.append(f"triple {' '.join(k)} = {v}  # {why}")
        out.append("")
        out.extend("expect " + e for e in self.expects)
        path.write_text("\n".join(out) + "\n")


def subtract(cls, terms, c=1):
    for k, v in terms.items():
        cls[k] = cls.get(k, 0) - c * v


def genus13():
    m = Model("P3 blown up along a tetrahedron: vertices, edges, then face lines on the vertex divisors")
    V = range(4)
    E = [f"E{k}" for k in V]
    for e in E:
        m.point(e, 4)
    for a, b in itertools.combinations(V, 2):
        m.curve(f"F{a}{b}", 2, [f"E{k}" for k in V if k not in (a, b)])
    # G{k}{j}: line cut by face j on the divisor over vertex k.
    for k in V:
        for j in V:
            if j != k:
                m.line(f"G{k}{j}", f"E{k}", [f"F{min(j, a)}{max(j, a)}" for a in V if a not in (j, k)])
    m.build()
    S = {"H": 6}
    for n in m.basis[1:]:
        S[n] = {"E": -3, "F": -2, "G": -4}[n[0]]
    m.add_class("S", S)
    for i in V:
        f = {"H": 1}
        for k in V:
            if k == i:
                continue
            subtract(f, m.pullback(f"E{k}"))
            subtract(f, {f"G{k}{i}": 1, f"F{min(i, k)}{max(i, k)}": 1})
        m.add_class(f"f{i}", f)
    m.expect("triple S S S = 24")
    m.expect("genus S = 13")
    for n in E + [f"f{i}" for i in V]:
        m.expect(f"contraction S {n} = to_point")
    for n in m.lines:
        m.expect(f"contraction S {n} = to_curve")
    for n in m.curves:
        m.expect(f"contraction S {n} = not_contracted")
        m.expect(f"triple S S {n} = 4")
    return m


def genus9():
    m = Model("P3 blown up along two trihedra: vertices, edge-face points, edges, the nine lines f_i.f'_j, then lines on the point divisors")
    I = [1, 2, 3]
    P = [(1, 2), (1, 3), (2, 3)]
    Q = [(i, j, k) for (i, j) in P for k in I]
    m.point("E", 4)
    m.point("E'", 4)
    for i, j, k in Q:
        m.point(f"E{i}{j}{k}", 3)
    for i, j, k in Q:
        m.point(f"E'{i}{j}{k}", 3)
    for i, j in P:
        m.curve(f"F{i}{j}", 6, ["E"] + [f"E{i}{j}{k}" for k in I])
    for i, j in P:
        m.curve(f"F'{i}{j}", 6, ["E'"] + [f"E'{i}{j}{k}" for k in I])
    # R{i}{k}: line f_i = f'_k = 0.
    for i in I:
        for k in I:
            th = [f"E{a}{b}{k}" for (a, b) in P if i in (a, b)] + [f"E'{a}{b}{i}" for (a, b) in P if k in (a, b)]
            m.curve(f"R{i}{k}", 6, th)
    for i in I:
        m.line(f"G{i}", "E", [f"F{a}{b}" for (a, b) in P if i in (a, b)])
    for i in I:
        m.line(f"G'{i}", "E'", [f"F'{a}{b}" for (a, b) in P if i in (a, b)])
    for i, j, k in Q:
        for h in (i, j):
            m.line(f"L{i}{j}{k}_{h}", f"E{i}{j}{k}", [f"F{i}{j}", f"R{h}{k}"])
    for i, j, k in Q:
        for h in (i, j):
            m.line(f"L'{i}{j}{k}_{h}", f"E'{i}{j}{k}", [f"F'{i}{j}", f"R{k}{h}"])
    m.build()
    K = {"H": 7, "E": -3, "E'": -3}
    for n in m.basis:
        if n in m.points and n not in ("E", "E'"):
            K[n] = -2
        elif n in m.curves:
            K[n] = -1 if n[0] == "R" else -2
        elif n in m.lines:
            K[n] = -4 if n[0] == "G" else -3
    m.add_class("K", K)
    for p in ("", "'"):
        q = "'" if p == "" else ""
        for h in I:
            f = {"H": 1}
            subtract(f, m.pullback("E" + p))
            for i, j, k in Q:
                if h in (i, j):
                    subtract(f, m.pullback(f"E{p}{i}{j}{k}"))
                    subtract(f, {f"L{p}{i}{j}{k}_{h}": 1})
                if k == h:
                    subtract(f, m.pullback(f"E{q}{i}{j}{k}"))
            for a, b in P:
                if h in (a, b):
                    subtract(f, {f"F{p}{a}{b}": 1})
            for k in I:
                subtract(f, {(f"R{h}{k}" if p == "" else f"R{k}{h}"): 1})
            subtract(f, {f"G{p}{h}": 1})
            m.add_class(f"f{p}{h}", f)
    m.expect("triple K K K = 16")
    m.expect("genus K = 9")
    for n in m.points:
        m.expect(f"contraction K {n} = to_point")
    for p in ("", "'"):
        for h in I:
            m.expect(f"contraction K f{p}{h} = to_point")
    for n in m.lines:
        m.expect(f"contraction K {n} = to_curve")
    for n in m.curves:
        if n[0] == "R":
            m.expect(f"contraction K {n} = to_curve")
            m.expect(f"triple {n} {n} K = -5")
        else:
            m.expect(f"contraction K {n} = not_contracted")
            m.expect(f"triple K K {n} = 8")
    return m


def genus7():
    m = Model("P3 blown up along a tetrahedron and a plane cubic through one point of each edge")
    V = range(4)
    P = list(itertools.combinations(V, 2))
    for k in V:
        m.point(f"E{k}", 4)
    for i, j in P:
        m.point(f"E{i}{j}", 2)
    for i, j in P:
        m.curve(f"F{i}{j}", 4, [f"E{k}" for k in V if k not in (i, j)] + [f"E{i}{j}"])
    m.curve("Fd", 0, [f"E{i}{j}" for (i, j) in P], degree=3)
    for k in V:
        for i in V:
            if i != k:
                m.line(f"G{k}{i}", f"E{k}", [f"F{min(i, j)}{max(i, j)}" for j in V if j not in (i, k)])
    for i, j in P:
        m.line(f"L{i}{j}", f"E{i}{j}", [f"F{i}{j}", "Fd"])
    m.build()
    X = {"H": 6}
    for n in m.basis[1:]:
        if n in m.points:
            X[n] = -3 if len(n) == 2 else -2
        elif n in m.curves:
            X[n] = -1 if n == "Fd" else -2
        else:
            X[n] = -4 if n[0] == "G" else -3
    m.add_class("X", X)
    for i in V:
        f = {"H": 1}
        for k in V:
            if k == i:
                continue
            a, b = min(i, k), max(i, k)
            subtract(f, m.pullback(f"E{k}"))
            subtract(f, m.pullback(f"E{a}{b}"))
            subtract(f, {f"G{k}{i}": 1, f"F{a}{b}": 1})
        m.add_class(f"f{i}", f)
    m.expect("triple X X X = 12")
    m.expect("genus X = 7")
    for k in V:
        m.expect(f"contraction X E{k} = to_point")
        m.expect(f"contraction X f{k} = to_point")
    for i, j in P:
        m.expect(f"contraction X E{i}{j} = to_curve")
    for n in m.lines:
        m.expect(f"contraction X {n} = to_curve")
    for i, j in P:
        m.expect(f"contraction X F{i}{j} = not_contracted")
        m.expect(f"triple X X F{i}{j} = 3")
    m.expect("contraction X Fd = not_contracted")
    m.expect("triple X X Fd = 6")
    return m


def genus6():
    m = Model("P3 blown up along three twisted cubics through five points and their three chords")
    I = [1, 2, 3]
    P = [(1, 2), (1, 3), (2, 3)]
    third = {(1, 2): 3, (1, 3): 2, (2, 3): 1}
    for h in range(1, 6):
        m.point(f"E{h}", 4)
    for i, j in P:
        m.point(f"E{i}{j}", 3)
    for i in I:
        m.point(f"E'{i}", 2)
        m.point(f"E''{i}", 2)
    for k in I:
        a, b = [x for x in I if x != k]
        m.curve(f"F{k}", 6, [f"E{h}" for h in range(1, 6)] + [f"E'{k}", f"E''{k}", f"E{a}{b}"], degree=3)
    for i in I:
        m.curve(f"R{i}", 6, [f"E'{i}", f"E''{i}"] + [f"E{min(i, j)}{max(i, j)}" for j in I if j != i])
    for h in range(1, 6):
        for i, j in P:
            m.line(f"G{h}_{i}{j}", f"E{h}", [f"F{i}", f"F{j}"])
    for i, j in P:
        for x in (i, j):
            m.line(f"L{i}{j}_{x}", f"E{i}{j}", [f"F{third[(i, j)]}", f"R{x}"])
    for i in I:
        m.line(f"L'{i}", f"E'{i}", [f"F{i}", f"R{i}"])
        m.line(f"L''{i}", f"E''{i}", [f"F{i}", f"R{i}"])
    m.build()
    Pc = {"H": 7}
    for n in m.basis[1:]:
        if n in m.points:
            Pc[n] = -3 if (len(n) == 2 and n[1].isdigit()) else -2
        elif n in m.curves:
            Pc[n] = -2 if n[0] == "F" else -1
        else:
            Pc[n] = -4 if n[0] == "G" else -3
    m.add_class("P", Pc)
    # Quadric Q{i+j+3} contains C_i, C_j and the chords r_i, r_j.
    for i, j in P:
        q = {"H": 2}
        for h in range(1, 6):
            subtract(q, m.pullback(f"E{h}"))
            subtract(q, {f"G{h}_{i}{j}": 1})
        for x in (i, j):
            for e in (f"E'{x}", f"E''{x}"):
                subtract(q, m.pullback(e))
            subtract(q, {f"L'{x}": 1, f"L''{x}": 1, f"F{x}": 1, f"R{x}": 1})
        for a, b in P:
            subtract(q, m.pullback(f"E{a}{b}"))
            for x in (a, b):
                if {x, third[(a, b)]} == {i, j}:
                    subtract(q, {f"L{a}{b}_{x}": 1})
        m.add_class(f"Q{i + j + 3}", q)
    m.expect("triple P P P = 10")
    m.expect("genus P = 6")
    for h in range(1, 6):
        m.expect(f"contraction P E{h} = to_point")
    for i, j in P:
        m.expect(f"contraction P E{i}{j} = to_point")
        m.expect(f"contraction P Q{i + j + 3} = to_point")
    for i in I:
        m.expect(f"contraction P E'{i} = to_curve")
        m.expect(f"contraction P E''{i} = to_curve")
        m.expect(f"contraction P R{i} = to_curve")
        m.expect(f"triple R{i} R{i} P = -5")
        m.expect(f"contraction P F{i} = not_contracted")
        m.expect(f"triple P P F{i} = 10")
    for n in m.lines:
        m.expect(f"contraction P {n} = to_curve")
    return m


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data" / "models")
    root.mkdir(parents=True, exist_ok=True)
    for name, fn in (("genus13", genus13), ("genus9", genus9), ("genus7", genus7), ("genus6", genus6)):
        fn().write(root / f"{name}.txt")


if __name__ == "__main__":
    main()
