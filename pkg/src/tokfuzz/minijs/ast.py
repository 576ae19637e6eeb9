"""MiniJS syntax tree nodes."""

from __future__ import annotations


class Node:
    __slots__ = ()

    def __repr__(self) -> str:
        fields = ", ".join(f"{s}={getattr(self, s)!r}" for s in self.__slots__)
        return f"{type(self).__name__}({fields})"

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and all(
            getattr(self, s) == getattr(other, s) for s in self.__slots__)


# Statements

class Program(Node):
    __slots__ = ("body", "funcs")

    def __init__(self, body, funcs):
        self.body = body
        self.funcs = funcs


class VarDecl(Node):
    __slots__ = ("kind", "name", "init")

    def __init__(self, kind, name, init):
        self.kind = kind
        self.name = name
        self.init = init


class FuncDecl(Node):
    __slots__ = ("name", "func")

    def __init__(self, name, func):
        self.name = name
        self.func = func


class If(Node):
    __slots__ = ("test", "then", "orelse")

    def __init__(self, test, then, orelse):
        self.test = test
        self.then = then
        self.orelse = orelse


class While(Node):
    __slots__ = ("test", "body")

    def __init__(self, test, body):
        self.test = test
        self.body = body


class For(Node):
    __slots__ = ("init", "test", "update", "body")

    def __init__(self, init, test, update, body):
        self.init = init
        self.test = test
        self.update = update
        self.body = body


class Return(Node):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value


class Block(Node):
    __slots__ = ("body", "funcs", "scoped")

    def __init__(self, body, funcs, scoped):
        self.body = body
        self.funcs = funcs
        self.scoped = scoped


class ExprStmt(Node):
    __slots__ = ("expr",)

    def __init__(self, expr):
        self.expr = expr


class Empty(Node):
    __slots__ = ()


# Expressions

class Assign(Node):
    __slots__ = ("target", "value")

    def __init__(self, target, value):
        self.target = target
        self.value = value


class Cond(Node):
    __slots__ = ("test", "then", "orelse")

    def __init__(self, test, then, orelse):
        self.test = test
        self.then = then
        self.orelse = orelse


class Logical(Node):
    __slots__ = ("op", "left", "right")

    def __init__(self, op, left, right):
        self.op = op
        self.left = left
        self.right = right


class Binary(Node):
    __slots__ = ("op", "left", "right")

    def __init__(self, op, left, right):
        self.op = op
        self.left = left
        self.right = right


class Unary(Node):
    __slots__ = ("op", "operand")

    def __init__(self, op, operand):
        self.op = op
        self.operand = operand


class Update(Node):
    __slots__ = ("op", "prefix", "target")

    def __init__(self, op, prefix, target):
        self.op = op
        self.prefix = prefix
        self.target = target


class Call(Node):
    """``slot`` is the argument-slot count the parser computed for this call."""

    __slots__ = ("callee", "args", "slot")

    def __init__(self, callee, args, slot):
        self.callee = callee
        self.args = args
        self.slot = slot


class New(Node):
    __slots__ = ("callee", "args")

    def __init__(self, callee, args):
        self.callee = callee
        self.args = args


class Member(Node):
    __slots__ = ("obj", "name")

    def __init__(self, obj, name):
        self.obj = obj
        self.name = name


class Index(Node):
    __slots__ = ("obj", "index")

    def __init__(self, obj, index):
        self.obj = obj
        self.index = index


class ArrayLit(Node):
    __slots__ = ("elems",)

    def __init__(self, elems):
        self.elems = elems


class ObjectLit(Node):
    """``props`` holds (key, value_expr, tag); tag is "data" or "cover"."""

    __slots__ = ("props",)

    def __init__(self, props):
        self.props = props


class FuncExpr(Node):
    """Function literal.  ``slot_mismatch`` is set by the const-redefinition defect."""

    __slots__ = ("name", "params", "body", "slot_mismatch")

    def __init__(self, name, params, body, slot_mismatch=False):
        self.name = name
        self.params = params
        self.body = body
        self.slot_mismatch = slot_mismatch


class Ident(Node):
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name


class Literal(Node):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value
