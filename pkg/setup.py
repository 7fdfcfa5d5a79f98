#!/usr/bin/env python

"""Setup file for the ``gflab`` package. Configuration is in ``setup.cfg``."""

from setuptools import setup


setup()
