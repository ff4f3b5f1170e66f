"""A small language for parameterized words.

Tokens are separated by spaces:

* ``021320`` is a run of single-digit nodes; ``{expr}`` is one node,
* ``g1`` / ``g{expr}`` is an Omega letter,
* ``a..b`` runs over consecutive nodes in whichever direction reaches ``b``;
  ``a.+b`` only counts up and ``a.-b`` only counts down (empty otherwise),
* ``( ... )^{expr}`` repeats a group,
* ``prod[i={a}..{b}]( ... )`` concatenates the group for ``i = a, a+1, ..., b``.

Expressions are integer arithmetic over the row parameters (``l``, ``k``,
``n``, ``m``, ``b``, ``np`` ...).  ``//`` is floor division.
"""

from __future__ import annotations

import ast
import operator
import re

_CMPOPS = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
}

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
}


class TemplateError(ValueError):
    pass


def evaluate(expr: str, env: dict[str, int]) -> int:
    """Evaluate an integer expression over ``env``.

    Allowed: + - * // %, comparisons, ``and``/``or``/``not``; booleans come
    back as 0 or 1.
    """

    def ev(node: ast.AST) -> int:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise TemplateError(f"unbound parameter {node.id!r}")
            return int(env[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            return int(not ev(node.operand))
        if isinstance(node, ast.BoolOp):
            vals = (ev(v) for v in node.values)
            return int(all(vals) if isinstance(node.op, ast.And) else any(vals))
        if isinstance(node, ast.Compare) and all(type(op) in _CMPOPS for op in node.ops):
            left = ev(node.left)
            for op, right_node in zip(node.ops, node.comparators):
                right = ev(right_node)
                if not _CMPOPS[type(op)](left, right):
                    return 0
                left = right
            return 1
        raise TemplateError(f"unsupported expression {expr!r}")

    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise TemplateError(f"bad expression {expr!r}") from exc
    return ev(tree)


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<prod>prod\[(?P<var>[a-z]+)=(?P<lo>\{[^}]*\}|-?\d+)\.\.(?P<hi>\{[^}]*\}|-?\d+)\]\()
      | (?P<open>\()
      | (?P<close>\)(?:\^(?P<exp>\{[^}]*\}|\d+))?)
      | (?P<range>(?P<a>\{[^}]*\}|\d+)\.(?P<dir>[.+-])(?P<c>\{[^}]*\}|\d+))
      | (?P<gamma>g(?:\{[^}]*\}|\d+))
      | (?P<node>\{[^}]*\})
      | (?P<digits>\d+)
    )""",
    re.VERBOSE,
)


def substitute(text: str, env: dict[str, int]) -> str:
    """Replace every ``{expr}`` in ``text`` by its value."""
    return re.sub(r"\{([^}]*)\}", lambda m: str(evaluate(m.group(1), env)), text)


def _value(tok: str, env: dict[str, int]) -> int:
    return evaluate(tok[1:-1], env) if tok.startswith("{") else int(tok)


def _tokenize(text: str) -> list[re.Match]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise TemplateError(f"cannot read template at {text[pos:]!r}")
        out.append(m)
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return out


def expand(template: str, env: dict[str, int]) -> list[int | str]:
    """Instantiate ``template`` into a word (ints and ``"g<i>"`` letters)."""
    tokens = _tokenize(template)
    word, end = _expand(tokens, 0, dict(env))
    if end != len(tokens):
        raise TemplateError(f"unbalanced ')' in {template!r}")
    return word


def _matching(tokens: list[re.Match], pos: int) -> int:
    depth = 0
    for j in range(pos, len(tokens)):
        if tokens[j].group("open") or tokens[j].group("prod"):
            depth += 1
        elif tokens[j].group("close"):
            depth -= 1
            if depth == 0:
                return j
    raise TemplateError("unbalanced '('")


def _expand(tokens: list[re.Match], pos: int, env: dict[str, int]) -> tuple[list, int]:
    out: list[int | str] = []
    while pos < len(tokens):
        m = tokens[pos]
        if m.group("close"):
            return out, pos
        if m.group("open") or m.group("prod"):
            start = pos + 1
            close = _matching(tokens, pos)
            exp_tok = tokens[close].group("exp")
            if m.group("prod"):
                if exp_tok:
                    raise TemplateError("a prod group cannot carry an exponent")
                lo, hi = _value(m.group("lo"), env), _value(m.group("hi"), env)
                for i in range(lo, hi + 1):
                    inner = dict(env, **{m.group("var"): i})
                    out += _expand(tokens, start, inner)[0]
            else:
                reps = _value(exp_tok, env) if exp_tok else 1
                if reps < 0:
                    raise TemplateError(f"negative exponent {reps}")
                if reps:
                    out += _expand(tokens, start, env)[0] * reps
            pos = close + 1
            continue
        if m.group("range"):
            a, c = _value(m.group("a"), env), _value(m.group("c"), env)
            step = 1 if c >= a else -1
            if (m.group("dir") == "+" and c < a) or (m.group("dir") == "-" and c > a):
                pass
            else:
                out += list(range(a, c + step, step))
        elif m.group("gamma"):
            out.append(f"g{_value(m.group('gamma')[1:], env)}")
        elif m.group("node"):
            out.append(_value(m.group("node"), env))
        else:
            out += [int(ch) for ch in m.group("digits")]
        pos += 1
    return out, pos
