"""Shared fixtures; logs and settings go to a temporary home"""
import os
import tempfile

import pytest

os.environ['GRPMAT_HOME'] = tempfile.mkdtemp(prefix='grpmat_test_')
os.environ.pop('GRPMAT_THREADS', None)

from src.models.catalog import catalog  # noqa: E402
from src.utils.error_logger import get_logger  # noqa: E402

# Bind the console handler before any test swaps sys.stderr
get_logger()


@pytest.fixture
def z4():
    return catalog('Z4')


@pytest.fixture
def v4():
    return catalog('V4')


@pytest.fixture
def s3():
    return catalog('S3')
