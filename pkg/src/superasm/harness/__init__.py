"""Generators, benchmarks, verification suites and the command line."""
