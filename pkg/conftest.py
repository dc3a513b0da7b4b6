"""
Shared pytest setup: project root on sys.path and the ``slow`` marker.
"""

import os
import sys

project_root = os.path.dirname(os.path.abspath(__file__))
if project_root not in sys.path:
    sys.path.insert(0, project_root)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: larger verification bounds (deselect with -m 'not slow')")
