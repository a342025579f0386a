import enum
from functools import singledispatch
import numpy as np


@singledispatch
def serialize(value):
    return value


@serialize.register(enum.Enum)
def _(value):
    return value.value


@serialize.register(np.bool_)
def _(value):
    return bool(value)


@serialize.register(np.integer)
def _(value):
    return int(value)


@serialize.register(np.floating)
def _(value):
    return float(value)


@serialize.register(np.ndarray)
def _(value):
    return serialize(value.tolist())


@serialize.register(list)
@serialize.register(tuple)
def _(value):
    return list(map(serialize, value))


@serialize.register(dict)
def _(value):
    return type(value)((key, serialize(item)) for (key, item) in value.items())
