"""Tree-walking evaluator for MiniJS.

Evaluation is bounded by a step budget (one step per evaluated node), a call
depth limit and allocation limits; exhausting any of them is a runtime
error, never a hang.  The interpreter reads no clock, randomness or
environment, so a program always produces the same status and coverage.
"""

from __future__ import annotations

import math

from . import ast
from .bugs import (
    BUG_CONST_REDEF, BUG_GC_SHIFT, BUG_SYNTAX_ASSIGN, BUG_TRAILING_EXPR, GC_SHIFT_THRESHOLD,
    AssertionFired,
)
from .probes import NullRecorder, Recorder, site

DEFAULT_STEP_LIMIT = 5_000
MAX_CALL_DEPTH = 48
MAX_ARRAY_LENGTH = 100_000
MAX_STRING_LENGTH = 1 << 20
MAX_OUTPUT = 1 << 16


class JSError(Exception):
    """A MiniJS-level error (TypeError, ReferenceError, RangeError, ...)."""

    def __init__(self, kind: str, message: str = ""):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


class StepLimit(JSError):
    def __init__(self):
        super().__init__("RangeError", "step limit exceeded")


class _Undefined:
    __slots__ = ()

    def __repr__(self) -> str:
        return "undefined"

    def __bool__(self) -> bool:
        return False


UNDEFINED = _Undefined()


class JSArray:
    __slots__ = ("items", "last_op", "alt_run")

    def __init__(self, items):
        self.items = items
        self.last_op = None
        self.alt_run = 0


class JSObject:
    __slots__ = ("props", "tags")

    def __init__(self):
        self.props: dict[str, object] = {}
        self.tags: dict[str, str] = {}


class Function:
    __slots__ = ("node", "env")

    def __init__(self, node: ast.FuncExpr, env: "Env"):
        self.node = node
        self.env = env


class Builtin:
    __slots__ = ("name", "fn", "this")

    def __init__(self, name, fn, this=None):
        self.name = name
        self.fn = fn
        self.this = this


class Env:
    __slots__ = ("vars", "consts", "parent")

    def __init__(self, parent: "Env | None"):
        self.vars: dict[str, object] = {}
        self.consts: set[str] | None = None
        self.parent = parent

    def lookup(self, name: str) -> "Env | None":
        env = self
        while env is not None:
            if name in env.vars:
                return env
            env = env.parent
        return None


class _Return(Exception):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value


def type_name(v) -> str:
    if v is None:
        return "null"
    if v is UNDEFINED:
        return "undefined"
    t = type(v)
    if t is float:
        return "number"
    if t is str:
        return "string"
    if t is bool:
        return "boolean"
    if t is JSArray:
        return "array"
    if t is JSObject:
        return "object"
    return "function"


def truthy(v) -> bool:
    t = type(v)
    if t is float:
        return v != 0.0 and v == v
    if t is str:
        return v != ""
    if t is bool:
        return v
    return not (v is None or v is UNDEFINED)


def to_number(v) -> float:
    t = type(v)
    if t is float:
        return v
    if t is bool:
        return 1.0 if v else 0.0
    if v is None:
        return 0.0
    if t is str:
        s = v.strip()
        if not s:
            return 0.0
        try:
            if s[:2] in ("0x", "0X"):
                return float(int(s[2:], 16))
            return float(s) if s.lower() not in ("inf", "-inf", "+inf", "nan", "infinity",
                                                 "-infinity", "+infinity") else math.nan
        except ValueError:
            return math.nan
    return math.nan


def number_to_string(x: float) -> str:
    if x != x:
        return "NaN"
    if x in (math.inf, -math.inf):
        return "Infinity" if x > 0 else "-Infinity"
    if x.is_integer() and abs(x) < 1e21:
        return str(int(x))
    return repr(x)


def to_string(v, depth: int = 0) -> str:
    t = type(v)
    if t is str:
        return v
    if t is float:
        return number_to_string(v)
    if t is bool:
        return "true" if v else "false"
    if v is None:
        return "null"
    if v is UNDEFINED:
        return "undefined"
    if t is JSArray:
        if depth > 4:
            return ""
        return ",".join("" if e is None or e is UNDEFINED else to_string(e, depth + 1)
                        for e in v.items[:256])
    if t is JSObject:
        return "[object Object]"
    return "function"


def _index_of(key) -> int | None:
    if type(key) is float and key.is_integer() and 0 <= key < 2 ** 32:
        return int(key)
    if type(key) is str and key.isdigit():
        return int(key)
    return None


class Interpreter:
    def __init__(self, recorder: Recorder | None = None, step_limit: int = DEFAULT_STEP_LIMIT,
                 armed: bool = True):
        self.rec = recorder if recorder is not None else NullRecorder()
        self.hit = self.rec.hit
        self.step_limit = step_limit
        self.steps = 0
        self.armed = armed
        self.depth = 0
        self.output: list[str] = []
        self.output_size = 0
        self.globals = Env(None)
        g = self.globals.vars
        g["print"] = Builtin("print", self._print)
        g["Array"] = Builtin("Array", self._array_ctor)
        g["String"] = Builtin("String", self._string_ctor)

    # -- entry --------------------------------------------------------------

    def run(self, program: ast.Program) -> None:
        self.hit(site("eval", "program"))
        self._hoist(program.funcs, self.globals)
        self.exec_list(program.body, self.globals)

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.step_limit:
            raise StepLimit()

    def check_string(self, s: str) -> str:
        if len(s) > MAX_STRING_LENGTH:
            self.hit(site("error", "string-too-long"))
            raise JSError("RangeError", "invalid string length")
        return s

    # -- statements -----------------------------------------------------------

    def _hoist(self, funcs, env: Env) -> None:
        for decl in funcs:
            self.hit(site("eval", "hoist-function"))
            env.vars[decl.name] = Function(decl.func, env)

    def exec_list(self, body, env: Env) -> None:
        execute = self.execute
        for stmt in body:
            execute(stmt, env)

    def execute(self, stmt, env: Env) -> None:
        self.steps += 1
        if self.steps > self.step_limit:
            raise StepLimit()
        t = type(stmt)
        if t is ast.ExprStmt:
            self.hit(S_EXEC_EXPR)
            self.eval(stmt.expr, env)
        elif t is ast.VarDecl:
            self.hit(S_EXEC_DECL[stmt.kind])
            value = UNDEFINED if stmt.init is None else self.eval(stmt.init, env)
            if stmt.kind == "var" and stmt.init is None and stmt.name in env.vars:
                return
            env.vars[stmt.name] = value
            if stmt.kind == "const":
                if env.consts is None:
                    env.consts = set()
                env.consts.add(stmt.name)
        elif t is ast.If:
            if truthy(self.eval(stmt.test, env)):
                self.hit(S_IF_THEN)
                self.execute(stmt.then, env)
            elif stmt.orelse is not None:
                self.hit(S_IF_ELSE)
                self.execute(stmt.orelse, env)
            else:
                self.hit(S_IF_SKIP)
        elif t is ast.While:
            self.hit(S_WHILE)
            n = 0
            while truthy(self.eval(stmt.test, env)):
                n += 1
                self.hit(S_WHILE_BODY)
                self.execute(stmt.body, env)
            self.hit(S_LOOP_COUNT[min(n, 4)])
        elif t is ast.For:
            self.hit(S_FOR)
            loop_env = Env(env)
            if stmt.init is not None:
                self.execute(stmt.init, loop_env)
            n = 0
            while stmt.test is None or truthy(self.eval(stmt.test, loop_env)):
                n += 1
                self.hit(S_FOR_BODY)
                self.execute(stmt.body, loop_env)
                if stmt.update is not None:
                    self.eval(stmt.update, loop_env)
            self.hit(S_LOOP_COUNT[min(n, 4)])
        elif t is ast.Block:
            self.hit(S_BLOCK)
            if stmt.scoped:
                env = Env(env)
                self._hoist(stmt.funcs, env)
            self.exec_list(stmt.body, env)
        elif t is ast.Return:
            self.hit(S_RETURN)
            raise _Return(UNDEFINED if stmt.value is None else self.eval(stmt.value, env))
        elif t is ast.Empty:
            self.hit(S_EMPTY)
        else:
            raise TypeError(f"unknown statement {t.__name__}")

    # -- expressions ----------------------------------------------------------

    def eval(self, node, env: Env):
        self.steps += 1
        if self.steps > self.step_limit:
            raise StepLimit()
        t = type(node)
        if t is ast.Literal:
            self.hit(S_LITERAL)
            return node.value
        if t is ast.Ident:
            name = node.name
            e = env
            while e is not None:
                vs = e.vars
                if name in vs:
                    self.hit(S_IDENT)
                    return vs[name]
                e = e.parent
            self.hit(S_IDENT_MISSING)
            raise JSError("ReferenceError", f"{name} is not defined")
        if t is ast.Binary:
            left = self.eval(node.left, env)
            right = self.eval(node.right, env)
            return self.binary(node.op, left, right)
        if t is ast.Call:
            return self.call(node, env)
        if t is ast.Member:
            obj = self.eval(node.obj, env)
            return self.get_member(obj, node.name)
        if t is ast.Assign:
            return self.assign(node, env)
        if t is ast.Index:
            obj = self.eval(node.obj, env)
            key = self.eval(node.index, env)
            return self.get_index(obj, key)
        if t is ast.Logical:
            left = self.eval(node.left, env)
            if node.op == "&&":
                if not truthy(left):
                    self.hit(S_AND_SHORT)
                    return left
                self.hit(S_AND_FULL)
            else:
                if truthy(left):
                    self.hit(S_OR_SHORT)
                    return left
                self.hit(S_OR_FULL)
            return self.eval(node.right, env)
        if t is ast.Unary:
            return self.unary(node, env)
        if t is ast.Update:
            return self.update(node, env)
        if t is ast.Cond:
            if truthy(self.eval(node.test, env)):
                self.hit(S_COND_THEN)
                return self.eval(node.then, env)
            self.hit(S_COND_ELSE)
            return self.eval(node.orelse, env)
        if t is ast.ArrayLit:
            self.hit(S_ARRAY_LIT)
            return JSArray([self.eval(e, env) for e in node.elems])
        if t is ast.ObjectLit:
            return self.object_literal(node, env)
        if t is ast.FuncExpr:
            self.hit(S_FUNC_EXPR)
            return Function(node, env)
        if t is ast.New:
            return self.new(node, env)
        raise TypeError(f"unknown expression {t.__name__}")

    def binary(self, op: str, left, right):
        lt = type_name(left)
        rt = type_name(right)
        self.hit(site("binary", f"{op}:{lt}:{rt}"))
        if op == "+":
            if type(left) is float and type(right) is float:
                return left + right
            if lt in ("string", "array", "object") or rt in ("string", "array", "object"):
                return self.check_string(to_string(left) + to_string(right))
            return to_number(left) + to_number(right)
        if op in ("-", "*", "/", "%"):
            a = to_number(left)
            b = to_number(right)
            if op == "-":
                return a - b
            if op == "*":
                try:
                    return a * b
                except OverflowError:
                    return math.inf
            if op == "/":
                if b == 0.0:
                    self.hit(S_DIV_ZERO)
                    if a != a or a == 0.0:
                        return math.nan
                    return math.copysign(math.inf, a) * math.copysign(1.0, b)
                return a / b
            if b == 0.0 or a in (math.inf, -math.inf) or a != a or b != b:
                return math.nan
            if b in (math.inf, -math.inf):
                return a
            return math.fmod(a, b)
        if op in ("<", ">", "<=", ">="):
            if type(left) is str and type(right) is str:
                a, b = left, right
            else:
                a, b = to_number(left), to_number(right)
                if a != a or b != b:
                    return False
            if op == "<":
                return a < b
            if op == ">":
                return a > b
            if op == "<=":
                return a <= b
            return a >= b
        if op == "===":
            return strict_equals(left, right)
        if op == "!==":
            return not strict_equals(left, right)
        if op == "==":
            return loose_equals(left, right)
        if op == "!=":
            return not loose_equals(left, right)
        raise TypeError(f"unknown operator {op}")

    def unary(self, node: ast.Unary, env: Env):
        op = node.op
        if op == "delete":
            operand = node.operand
            if type(operand) is ast.Member:
                obj = self.eval(operand.obj, env)
                self.hit(site("delete", type_name(obj)))
                if type(obj) is JSObject:
                    obj.props.pop(operand.name, None)
                    obj.tags.pop(operand.name, None)
                elif obj is None or obj is UNDEFINED:
                    raise JSError("TypeError", "cannot delete property of null")
                return True
            if type(operand) is ast.Index:
                obj = self.eval(operand.obj, env)
                key = self.eval(operand.index, env)
                self.hit(site("delete-index", type_name(obj)))
                if type(obj) is JSObject:
                    k = to_string(key)
                    obj.props.pop(k, None)
                    obj.tags.pop(k, None)
                elif type(obj) is JSArray:
                    i = _index_of(key)
                    if i is not None and i < len(obj.items):
                        obj.items[i] = UNDEFINED
                elif obj is None or obj is UNDEFINED:
                    raise JSError("TypeError", "cannot delete property of null")
                return True
            self.hit(site("delete", "other"))
            self.eval(operand, env)
            return True
        if op == "typeof":
            if type(node.operand) is ast.Ident and env.lookup(node.operand.name) is None:
                self.hit(site("typeof", "undeclared"))
                return "undefined"
            v = self.eval(node.operand, env)
            self.hit(site("typeof", type_name(v)))
            if v is None or type(v) in (JSArray, JSObject):
                return "object"
            if type(v) in (Function, Builtin):
                return "function"
            return type_name(v)
        v = self.eval(node.operand, env)
        self.hit(site("unary", f"{op}:{type_name(v)}"))
        if op == "!":
            return not truthy(v)
        if op == "-":
            return -to_number(v)
        return to_number(v)

    def update(self, node: ast.Update, env: Env):
        old = to_number(self.eval(node.target, env))
        new = old + 1.0 if node.op == "++" else old - 1.0
        self.hit(site("update", f"{node.op}:{'prefix' if node.prefix else 'postfix'}"))
        self.store(node.target, new, env)
        return new if node.prefix else old

    # -- assignment -------------------------------------------------------------

    def assign(self, node: ast.Assign, env: Env):
        value = self.eval(node.value, env)
        self.store(node.target, value, env)
        return value

    def store(self, target, value, env: Env) -> None:
        t = type(target)
        if t is ast.Ident:
            name = target.name
            scope = env.lookup(name)
            if scope is None:
                self.hit(S_ASSIGN_GLOBAL)
                self.globals.vars[name] = value
                return
            if scope.consts is not None and name in scope.consts:
                self.hit(S_ASSIGN_CONST)
                raise JSError("TypeError", "assignment to constant variable")
            if scope.parent is None and scope.vars.get(name) is not None \
                    and type(scope.vars[name]) is Builtin:
                self.hit(site("assign", "builtin"))
            self.hit(S_ASSIGN_LOCAL)
            scope.vars[name] = value
            return
        obj = self.eval(target.obj, env)
        if t is ast.Member:
            key = target.name
        else:
            key = self.eval(target.index, env)
        self.set_property(obj, key, value)

    def set_property(self, obj, key, value) -> None:
        to = type(obj)
        self.hit(site("set", type_name(obj)))
        if to is JSObject:
            k = key if type(key) is str else to_string(key)
            if k not in obj.tags:
                self.hit(site("set", "new-property"))
                obj.tags[k] = "data"
                if len(obj.props) >= MAX_ARRAY_LENGTH:
                    raise JSError("RangeError", "too many properties")
            obj.props[k] = value
            return
        if to is JSArray:
            if key == "length":
                self.hit(site("set", "array-length"))
                n = _index_of(value if type(value) is float else to_number(value))
                if n is None or n > MAX_ARRAY_LENGTH:
                    raise JSError("RangeError", "invalid array length")
                items = obj.items
                if n < len(items):
                    del items[n:]
                else:
                    items.extend([UNDEFINED] * (n - len(items)))
                return
            i = _index_of(key)
            if i is None:
                self.hit(site("set", "array-non-index"))
                return
            items = obj.items
            if i < len(items):
                self.hit(site("set", "array-in-bounds"))
                items[i] = value
            else:
                self.hit(site("set", "array-grow"))
                if i >= MAX_ARRAY_LENGTH:
                    raise JSError("RangeError", "array too large")
                items.extend([UNDEFINED] * (i - len(items)))
                items.append(value)
            return
        if obj is None or obj is UNDEFINED:
            raise JSError("TypeError", "cannot set property of " + type_name(obj))
        # Primitives and functions silently drop property writes.

    # -- property reads ---------------------------------------------------------

    def get_member(self, obj, name: str):
        to = type(obj)
        if to is JSObject:
            if name in obj.props:
                self.hit(S_GET_OBJ_HIT)
                return obj.props[name]
            self.hit(S_GET_OBJ_MISS)
            return UNDEFINED
        if to is JSArray:
            if name == "length":
                self.hit(S_GET_ARRAY_LENGTH)
                return float(len(obj.items))
            method = ARRAY_METHODS.get(name)
            if method is not None:
                self.hit(site("get-array-method", name))
                return Builtin(name, method, obj)
            self.hit(site("get-array", "other"))
            return UNDEFINED
        if to is str:
            if name == "length":
                self.hit(site("get-string", "length"))
                return float(len(obj))
            self.hit(site("get-string", "other"))
            return UNDEFINED
        if obj is None or obj is UNDEFINED:
            self.hit(site("get", "nullish"))
            raise JSError("TypeError", f"cannot read property {name} of {type_name(obj)}")
        self.hit(site("get", type_name(obj)))
        return UNDEFINED

    def get_index(self, obj, key):
        to = type(obj)
        self.hit(site("index", f"{type_name(obj)}:{type_name(key)}"))
        if to is JSArray:
            i = _index_of(key)
            if i is not None:
                return obj.items[i] if i < len(obj.items) else UNDEFINED
            return self.get_member(obj, to_string(key))
        if to is JSObject:
            return obj.props.get(to_string(key), UNDEFINED)
        if to is str:
            i = _index_of(key)
            if i is not None:
                return obj[i] if i < len(obj) else UNDEFINED
            return self.get_member(obj, to_string(key))
        if obj is None or obj is UNDEFINED:
            raise JSError("TypeError", f"cannot read index of {type_name(obj)}")
        return UNDEFINED

    def object_literal(self, node: ast.ObjectLit, env: Env):
        self.hit(S_OBJECT_LIT)
        obj = JSObject()
        for key, expr, tag in node.props:
            self.hit(S_PROP_TAG[tag])
            obj.props[key] = self.eval(expr, env)
            if tag == "cover" and self.armed:
                # The member was stored under the cover-grammar tag, not a data tag.
                raise AssertionFired(BUG_SYNTAX_ASSIGN, "property type tag mismatch")
            obj.tags[key] = tag
        return obj

    # -- calls ------------------------------------------------------------------

    def call(self, node: ast.Call, env: Env):
        callee = self.eval(node.callee, env)
        args = [self.eval(a, env) for a in node.args]
        tc = type(callee)
        if tc is Builtin:
            self.hit(site("call-builtin", callee.name))
            return callee.fn(self, callee.this, args)
        if tc is Function:
            return self.call_function(callee, args, node.slot)
        self.hit(site("call", "not-callable:" + type_name(callee)))
        raise JSError("TypeError", "not a function")

    def call_function(self, fn: Function, args: list, slot: int | None = None):
        node = fn.node
        params = node.params
        self.hit(site("call-user", f"params{min(len(params), 4)}:args{min(len(args), 4)}"))
        if node.slot_mismatch:
            self.hit(site("call-user", "slot-mismatch"))
            if self.armed:
                raise AssertionFired(BUG_CONST_REDEF, "declared slot count mismatch")
        self.depth += 1
        if self.depth > MAX_CALL_DEPTH:
            self.depth -= 1
            self.hit(site("call-user", "stack-overflow"))
            raise JSError("RangeError", "maximum call stack size exceeded")
        frame = Env(fn.env)
        bound = len(args) if slot is None else slot
        vs = frame.vars
        for i, p in enumerate(params):
            if i < bound:
                if i >= len(args):
                    self.hit(site("call-user", "slot-out-of-bounds"))
                    if self.armed:
                        self.depth -= 1
                        raise AssertionFired(BUG_TRAILING_EXPR, "argument slot index out of bounds")
                    vs[p] = UNDEFINED
                else:
                    vs[p] = args[i]
            else:
                self.hit(S_MISSING_ARG)
                vs[p] = UNDEFINED
        body = node.body
        try:
            self._hoist(body.funcs, frame)
            self.exec_list(body.body, frame)
            result = UNDEFINED
        except _Return as ret:
            self.hit(S_RETURNED)
            result = ret.value
        finally:
            self.depth -= 1
        return result

    def new(self, node: ast.New, env: Env):
        callee = self.eval(node.callee, env)
        args = [self.eval(a, env) for a in node.args]
        if type(callee) is Builtin and callee.this is None:
            self.hit(site("new", callee.name))
            return callee.fn(self, None, args)
        if type(callee) is Function:
            self.hit(site("new", "user"))
            result = self.call_function(callee, args)
            if type(result) in (JSObject, JSArray):
                return result
            return JSObject()
        self.hit(site("new", "not-constructor"))
        raise JSError("TypeError", "not a constructor")

    # -- builtins ---------------------------------------------------------------

    def _print(self, _interp, _this, args):
        text = " ".join(to_string(a) for a in args)
        if self.output_size < MAX_OUTPUT:
            self.output.append(text)
            self.output_size += len(text) + 1
        return UNDEFINED

    def _array_ctor(self, _interp, _this, args):
        if len(args) == 1 and type(args[0]) is float:
            n = args[0]
            if not n.is_integer() or n < 0 or n > MAX_ARRAY_LENGTH:
                self.hit(site("array-ctor", "bad-length"))
                raise JSError("RangeError", "invalid array length")
            self.hit(site("array-ctor", "length"))
            return JSArray([UNDEFINED] * int(n))
        self.hit(site("array-ctor", f"items{min(len(args), 3)}"))
        return JSArray(list(args))

    def _string_ctor(self, _interp, _this, args):
        self.hit(site("string-ctor", type_name(args[0]) if args else "none"))
        return to_string(args[0]) if args else ""


def _gc_track(interp: Interpreter, arr: JSArray, op: str) -> None:
    if arr.last_op is not None and arr.last_op != op:
        arr.alt_run += 1
    else:
        arr.alt_run = 1
    arr.last_op = op
    interp.hit(site("gc-free-list", f"{op}:{min(arr.alt_run, GC_SHIFT_THRESHOLD)}"))
    if arr.alt_run >= GC_SHIFT_THRESHOLD and interp.armed:
        raise AssertionFired(BUG_GC_SHIFT, "free-list consistency check")


def _array_push(interp, arr, args):
    if len(arr.items) + len(args) > MAX_ARRAY_LENGTH:
        raise JSError("RangeError", "array too large")
    arr.items.extend(args)
    return float(len(arr.items))


def _array_pop(interp, arr, args):
    if not arr.items:
        interp.hit(site("array-pop", "empty"))
        return UNDEFINED
    return arr.items.pop()


def _array_shift(interp, arr, args):
    _gc_track(interp, arr, "shift")
    if not arr.items:
        interp.hit(site("array-shift", "empty"))
        return UNDEFINED
    return arr.items.pop(0)


def _array_unshift(interp, arr, args):
    _gc_track(interp, arr, "unshift")
    if len(arr.items) + len(args) > MAX_ARRAY_LENGTH:
        raise JSError("RangeError", "array too large")
    arr.items[0:0] = args
    return float(len(arr.items))


ARRAY_METHODS = {
    "push": _array_push,
    "pop": _array_pop,
    "shift": _array_shift,
    "unshift": _array_unshift,
}


def strict_equals(a, b) -> bool:
    ta, tb = type(a), type(b)
    if ta is not tb:
        return False
    if ta in (float, str, bool):
        return a == b
    return a is b


def loose_equals(a, b) -> bool:
    if (a is None or a is UNDEFINED) and (b is None or b is UNDEFINED):
        return True
    if a is None or a is UNDEFINED or b is None or b is UNDEFINED:
        return False
    ta, tb = type(a), type(b)
    if ta is tb:
        return strict_equals(a, b)
    if ta in (float, str, bool) and tb in (float, str, bool):
        return to_number(a) == to_number(b)
    if ta in (JSArray, JSObject) and tb in (float, str):
        return loose_equals(to_string(a), b)
    if tb in (JSArray, JSObject) and ta in (float, str):
        return loose_equals(a, to_string(b))
    return False


S_EXEC_EXPR = site("exec", "expression")
S_EXEC_DECL = {k: site("exec", f"decl-{k}") for k in ("let", "const", "var")}
S_IF_THEN = site("exec", "if-then")
S_IF_ELSE = site("exec", "if-else")
S_IF_SKIP = site("exec", "if-skip")
S_WHILE = site("exec", "while")
S_WHILE_BODY = site("exec", "while-body")
S_FOR = site("exec", "for")
S_FOR_BODY = site("exec", "for-body")
S_LOOP_COUNT = [site("exec", f"loop-iterations-{i}") for i in range(5)]
S_BLOCK = site("exec", "block")
S_RETURN = site("exec", "return")
S_EMPTY = site("exec", "empty")
S_LITERAL = site("eval", "literal")
S_IDENT = site("eval", "identifier")
S_IDENT_MISSING = site("eval", "identifier-undefined")
S_AND_SHORT = site("eval", "and-short")
S_AND_FULL = site("eval", "and-full")
S_OR_SHORT = site("eval", "or-short")
S_OR_FULL = site("eval", "or-full")
S_COND_THEN = site("eval", "cond-then")
S_COND_ELSE = site("eval", "cond-else")
S_ARRAY_LIT = site("eval", "array-literal")
S_OBJECT_LIT = site("eval", "object-literal")
S_PROP_TAG = {"data": site("eval", "property-data"), "cover": site("eval", "property-cover")}
S_FUNC_EXPR = site("eval", "function-expression")
S_DIV_ZERO = site("eval", "divide-by-zero")
S_ASSIGN_GLOBAL = site("assign", "implicit-global")
S_ASSIGN_CONST = site("assign", "const")
S_ASSIGN_LOCAL = site("assign", "binding")
S_GET_OBJ_HIT = site("get-object", "hit")
S_GET_OBJ_MISS = site("get-object", "miss")
S_GET_ARRAY_LENGTH = site("get-array", "length")
S_MISSING_ARG = site("call-user", "missing-argument")
S_RETURNED = site("call-user", "returned")
