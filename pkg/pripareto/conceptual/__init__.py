# -*- coding: utf-8 -*-#
"""Optimizer-independent building blocks: errors, dominance, variation and the generational loop."""
