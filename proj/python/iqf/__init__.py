"""Integral quadratic forms and bidirected graphs.

Forms, graphs and quivers are plain dicts in the same JSON layout the command
line tool reads, for example ``{"n": 2, "diag": [1, 1], "off": [[1, 2, -1]]}``.
Integers too large for 64 bits appear as decimal strings.
"""

import json

from . import _iqf
from ._iqf import FormatError, IqfError

__all__ = [
    "FormatError",
    "IqfError",
    "error_kind",
    "qf_info",
    "qf_realize",
    "qf_canonical_c",
    "qf_solve",
    "bg_form",
    "bg_balance",
    "bg_roots",
    "bg_line",
    "bg_switch_equiv",
    "gentle_euler",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def error_kind(err):
    """Kind name of an IqfError, such as ``"NotPositive"``."""
    return str(err).split(":", 1)[0]


def qf_info(form):
    return json.loads(_iqf.qf_info(_text(form)))


def qf_realize(form):
    return json.loads(_iqf.qf_realize(_text(form)))


def qf_canonical_c(form):
    return json.loads(_iqf.qf_canonical_c(_text(form)))


def qf_solve(form, d, bound=8, walk_sum=False):
    return json.loads(_iqf.qf_solve(_text(form), str(d), bound, walk_sum))


def bg_form(graph):
    return json.loads(_iqf.bg_form(_text(graph)))


def bg_balance(graph):
    return json.loads(_iqf.bg_balance(_text(graph)))


def bg_roots(graph, set=1, max_len=0, bound=0):
    return json.loads(_iqf.bg_roots(_text(graph), set, max_len, bound))


def bg_line(graph):
    return json.loads(_iqf.bg_line(_text(graph)))


def bg_switch_equiv(graph, other):
    return json.loads(_iqf.bg_switch_equiv(_text(graph), _text(other)))


def gentle_euler(quiver):
    return json.loads(_iqf.gentle_euler(_text(quiver)))
