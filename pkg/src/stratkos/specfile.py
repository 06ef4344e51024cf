"""Flat file formats for algebras and EI categories.

Algebra files (.alg) come in two flavors selected by a ``format`` line:

``format quiver`` (default)::

    name bridged_loops
    field Q            # or GF(2), GF(3), ...
    vertex x y
    arrow d x x 0      # name source target degree
    arrow a x y 1
    relation a*d       # linear combinations of parallel paths,
    relation r*a - b   # path syntax right-to-left: a*d applies d first
    maxdim 2000        # optional bound on the basis enumeration

``format table`` (emitted by gamma/reduce/graded/ei)::

    name gamma
    field Q
    format table
    vertex x y
    elem e_x x x 0     # name source target degree
    elem b  x y 1
    idem x e_x
    prod b b = 0       # omitted products are zero; idempotent products
    prod g b = 1*gb    # are filled in automatically

EI category files (.ei)::

    name c2_chain
    object x trivial
    object y C2        # trivial | C<n> | table <n> (+ gtable rows)
    arrow alpha x y 1  # name source target biset-size
    left alpha 1 0     # arrow, acting element index, images (identity rows
    right alpha 0 0    # may be omitted)
"""

from __future__ import annotations

from .algebra import Algebra
from .eicat import Biset, EIQuiver, FiniteGroup
from .errors import SpecFileError
from .field import Field
from .quiver import Presentation, Quiver, build_from_presentation

DEFAULT_MAXDIM = 2000


def parse_field(text, line=None):
    text = text.strip()
    if text in ("Q", "QQ", "0"):
        return Field(0)
    if text.startswith("GF(") and text.endswith(")"):
        try:
            return Field(int(text[3:-1]))
        except ValueError as e:
            raise SpecFileError(f"bad field spec {text!r}", line) from e
    raise SpecFileError(f"bad field spec {text!r} (use Q or GF(p))", line)


def field_to_str(field):
    return "Q" if field.char == 0 else f"GF({field.char})"


def _lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


class ParsedAlgebraFile:
    def __init__(self, name, field, algebra, fmt):
        self.name = name
        self.field = field
        self.algebra = algebra
        self.format = fmt


def parse_algebra_file(text):
    name = "algebra"
    field = None
    fmt = "quiver"
    vertices = []
    arrows = []
    relations = []      # (line number, raw text)
    elems = []          # table format: (name, src, tgt, deg)
    idems = {}
    prods = []          # (line, left, right, rhs text)
    maxdim = DEFAULT_MAXDIM
    for no, line in _lines(text):
        parts = line.split()
        key = parts[0]
        if key == "name":
            name = parts[1]
        elif key == "field":
            field = parse_field(" ".join(parts[1:]), no)
        elif key == "format":
            fmt = parts[1]
            if fmt not in ("quiver", "table"):
                raise SpecFileError(f"unknown format {fmt!r}", no)
        elif key == "vertex":
            vertices.extend(parts[1:])
        elif key == "arrow":
            if len(parts) != 5:
                raise SpecFileError("arrow needs: name source target degree", no)
            try:
                deg = int(parts[4])
            except ValueError:
                raise SpecFileError(f"bad arrow degree {parts[4]!r}", no)
            arrows.append((parts[1], parts[2], parts[3], deg))
        elif key == "relation":
            relations.append((no, " ".join(parts[1:])))
        elif key == "maxdim":
            maxdim = int(parts[1])
        elif key == "elem":
            if len(parts) != 5:
                raise SpecFileError("elem needs: name source target degree", no)
            elems.append((parts[1], parts[2], parts[3], int(parts[4])))
        elif key == "idem":
            idems[parts[1]] = parts[2]
        elif key == "prod":
            if "=" not in parts:
                raise SpecFileError("prod needs: prod a b = combination", no)
            eq = parts.index("=")
            if eq != 3:
                raise SpecFileError("prod needs exactly two factors", no)
            prods.append((no, parts[1], parts[2], " ".join(parts[eq + 1:])))
        else:
            raise SpecFileError(f"unknown directive {key!r}", no)
    if field is None:
        raise SpecFileError("missing field line")
    if not vertices:
        raise SpecFileError("missing vertex line")
    if fmt == "quiver":
        algebra = _build_quiver_format(field, vertices, arrows, relations, maxdim)
    else:
        algebra = _build_table_format(field, vertices, elems, idems, prods)
    return ParsedAlgebraFile(name, field, algebra, fmt)


def _build_quiver_format(field, vertices, arrows, relations, maxdim):
    quiver = Quiver(vertices, arrows)
    rels = [parse_relation(quiver, field, text, no) for no, text in relations]
    pres = Presentation(quiver, rels, field)
    return build_from_presentation(pres, max_dim=maxdim)


def parse_relation(quiver, field, text, line=None):
    """``2*a*d - b + 1/2*c*e`` -> {path tuple: coefficient}."""
    out = {}
    for sign, term in _split_terms(text, line):
        coeff = field.one if sign == "+" else field.neg(field.one)
        path = []
        for factor in term.split("*"):
            factor = factor.strip()
            if not factor:
                raise SpecFileError(f"empty factor in term {term!r}", line)
            if factor in quiver.arrow_index:
                path.append(quiver.arrow_index[factor])
            else:
                try:
                    coeff = field.mul(coeff, field.parse(factor))
                except (ValueError, ZeroDivisionError):
                    raise SpecFileError(f"unknown arrow {factor!r}", line)
        if not path:
            raise SpecFileError(f"term {term!r} has no arrows", line)
        key = tuple(path)
        out[key] = field.add(out.get(key, field.zero), coeff)
    return out


def _split_terms(text, line):
    text = text.replace("-", "+-").replace(" ", "")
    if not text:
        raise SpecFileError("empty relation", line)
    for chunk in text.split("+"):
        if not chunk:
            continue
        if chunk.startswith("-"):
            yield "-", chunk[1:]
        else:
            yield "+", chunk


def _build_table_format(field, vertices, elems, idems, prods):
    names = [e[0] for e in elems]
    if len(set(names)) != len(names):
        raise SpecFileError("duplicate elem names")
    index = {n: i for i, n in enumerate(names)}
    vindex = {v: i for i, v in enumerate(vertices)}
    try:
        src = [vindex[e[1]] for e in elems]
        tgt = [vindex[e[2]] for e in elems]
    except KeyError as e:
        raise SpecFileError(f"undeclared vertex {e}")
    deg = [e[3] for e in elems]
    idem = []
    for v in vertices:
        if v not in idems:
            raise SpecFileError(f"missing idem line for vertex {v}")
        idem.append(index[idems[v]])
    mult = {}
    # automatic unit behavior
    for v, ei in enumerate(idem):
        for j, nm in enumerate(names):
            if tgt[j] == v:
                mult[(ei, j)] = ((j, field.one),)
            if src[j] == v and (j, ei) not in mult:
                mult[(j, ei)] = ((j, field.one),)
    for no, a, b, rhs in prods:
        if a not in index or b not in index:
            raise SpecFileError(f"unknown elem in prod {a} {b}", no)
        terms = _parse_combination(field, index, rhs, no)
        if (index[a], index[b]) in mult and set(idem) & {index[a], index[b]}:
            raise SpecFileError("prod lines may not override idempotent products", no)
        if terms:
            mult[(index[a], index[b])] = terms
    return Algebra(field, names, src, tgt, deg, vertices, idem, mult)


def _parse_combination(field, index, text, line):
    text = text.strip()
    if text == "0":
        return ()
    out = {}
    for sign, term in _split_terms(text, line):
        coeff = field.one if sign == "+" else field.neg(field.one)
        target = None
        for factor in term.split("*"):
            if factor in index:
                if target is not None:
                    raise SpecFileError("table products must be linear in elems", line)
                target = index[factor]
            else:
                try:
                    coeff = field.mul(coeff, field.parse(factor))
                except (ValueError, ZeroDivisionError):
                    raise SpecFileError(f"unknown elem {factor!r}", line)
        if target is None:
            raise SpecFileError(f"term {term!r} names no elem", line)
        out[target] = field.add(out.get(target, field.zero), coeff)
    return tuple(sorted((k, c) for k, c in out.items() if c != field.zero))


def emit_algebra_file(algebra, name):
    """Table-format text for any Algebra; round-trips through the parser."""
    lines = [f"name {name}", f"field {field_to_str(algebra.field)}", "format table",
             "vertex " + " ".join(str(v) for v in algebra.vertices)]
    used = set()
    safe = []
    for i, raw in enumerate(algebra.names):
        nm = "".join(ch if ch.isalnum() or ch in "_." else "_" for ch in str(raw))
        if not nm or nm[0].isdigit():
            nm = f"b{i}_{nm}"
        while nm in used:
            nm += "x"
        used.add(nm)
        safe.append(nm)
    for i in range(algebra.dim):
        lines.append(f"elem {safe[i]} {algebra.vertices[algebra.src[i]]} "
                     f"{algebra.vertices[algebra.tgt[i]]} {algebra.deg[i]}")
    for v, ei in enumerate(algebra.idem):
        lines.append(f"idem {algebra.vertices[v]} {safe[ei]}")
    idem_set = set(algebra.idem)
    for (i, j), terms in sorted(algebra.mult.items()):
        if i in idem_set or j in idem_set:
            continue
        terms = [(k, c) for k, c in terms if c != algebra.field.zero]
        if not terms:
            continue
        rhs = " + ".join(f"{algebra.field.to_str(c)}*{safe[k]}" for k, c in terms)
        lines.append(f"prod {safe[i]} {safe[j]} = {rhs}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# EI files


def parse_ei_file(text):
    name = "ei"
    objects = []          # (label, group spec parts)
    gtables = {}
    arrows = []           # (name, src, tgt, size)
    left_rows = {}        # arrow -> {gidx: images}
    right_rows = {}
    for no, line in _lines(text):
        parts = line.split()
        key = parts[0]
        if key == "name":
            name = parts[1]
        elif key == "object":
            objects.append((parts[1], parts[2:], no))
        elif key == "gtable":
            gtables.setdefault(parts[1], []).append(
                (no, [int(x) for x in parts[2:]]))
        elif key == "arrow":
            if len(parts) != 5:
                raise SpecFileError("arrow needs: name source target size", no)
            arrows.append((parts[1], parts[2], parts[3], int(parts[4]), no))
        elif key in ("left", "right"):
            rows = left_rows if key == "left" else right_rows
            rows.setdefault(parts[1], {})[int(parts[2])] = \
                [int(x) for x in parts[3:]]
        else:
            raise SpecFileError(f"unknown directive {key!r}", no)
    groups = {}
    labels = []
    for label, spec, no in objects:
        labels.append(label)
        if not spec or spec[0] == "trivial":
            groups[label] = FiniteGroup.trivial(name=f"1@{label}")
        elif spec[0].startswith("C"):
            try:
                n = int(spec[0][1:])
            except ValueError:
                raise SpecFileError(f"bad group spec {spec[0]!r}", no)
            groups[label] = FiniteGroup.cyclic(n, name=f"C{n}@{label}")
        elif spec[0] == "table":
            n = int(spec[1])
            rows = sorted(gtables.get(label, []))
            if len(rows) != n:
                raise SpecFileError(f"group table of {label} needs {n} gtable rows", no)
            table = [r for _, r in rows]
            groups[label] = FiniteGroup([f"g{i}" if i else "1" for i in range(n)],
                                        table, name=f"G@{label}")
        else:
            raise SpecFileError(f"bad group spec {spec[0]!r}", no)
    quiver_arrows = []
    bisets = {}
    for aname, s, t, size, no in arrows:
        if s not in groups or t not in groups:
            raise SpecFileError(f"arrow {aname} has undeclared endpoint", no)
        H, G = groups[t], groups[s]
        left = [list(range(size)) for _ in range(H.order)]
        for gidx, images in left_rows.get(aname, {}).items():
            if len(images) != size:
                raise SpecFileError(f"left row of {aname} needs {size} images", no)
            left[gidx] = images
        right = [list(range(size)) for _ in range(G.order)]
        for gidx, images in right_rows.get(aname, {}).items():
            right[gidx] = images
        quiver_arrows.append((aname, s, t))
        bisets[aname] = Biset(size, H, G, left, right, name=aname)
    return name, EIQuiver(labels, quiver_arrows, groups, bisets)
