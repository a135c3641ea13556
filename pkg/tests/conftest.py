"""
测试公共配置

在导入 normtuple 之前把 NORMTUPLE_HOME 指向临时目录，日志不会写进 ~
"""

import os
import tempfile

os.environ["NORMTUPLE_HOME"] = tempfile.mkdtemp(prefix="normtuple-test-")
for _key in ("NORMTUPLE_FACTOR_BOUND", "NORMTUPLE_WORKERS", "NORMTUPLE_GENERATOR_BOUND"):
    os.environ.pop(_key, None)

import pytest

from normtuple.config import activate
from normtuple.field import field_new


@pytest.fixture(autouse=True)
def _reset_active_config():
    activate(None)
    yield
    activate(None)


@pytest.fixture
def q5():
    return field_new(5)


@pytest.fixture
def q_minus3():
    return field_new(-3)


@pytest.fixture
def q13():
    return field_new(13)


@pytest.fixture
def q_minus5():
    return field_new(-5)
