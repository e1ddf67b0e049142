# -*- coding: utf-8 -*-#
"""Controllers behind the command line.

Configuration loading, the experiment runner producing evaluation logs and per-algorithm non-dominated sets,
and the analysis commands working on those files: merge, metrics, filter and report.
"""
