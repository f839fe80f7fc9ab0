"""Little cubes: tensor words, evaluation, factorization and contraction.

Configurations and words are plain dicts in the same JSON encoding the
``lcubes`` command-line tool uses. Invalid input raises ``ValueError``.
"""

import json

from . import _lcubes
from ._lcubes import ThresholdNotFound

__all__ = [
    "ThresholdNotFound",
    "brute_force_decomposable",
    "contract",
    "eval_word",
    "factor",
    "gen_config",
    "gen_word",
    "is_decomposable",
    "normalize_gen_pos",
    "render_svg",
    "run_suite",
    "suite_names",
    "threshold",
    "word_equal",
]


def _blocks(blocks):
    if isinstance(blocks, str):
        return blocks
    return ",".join(str(int(k)) for k in blocks)


def _dump(value):
    return value if isinstance(value, str) else json.dumps(value)


def eval_word(word, blocks=(1, 1)):
    return json.loads(_lcubes.eval_word(_dump(word), _blocks(blocks)))


def factor(config, blocks=(1, 1)):
    """Canonical word, or a dict with ``"decomposable": False`` and the stuck part."""
    return json.loads(_lcubes.factor(_dump(config), _blocks(blocks)))


def is_decomposable(config, blocks=(1, 1)):
    return _lcubes.is_decomposable(_dump(config), _blocks(blocks))


def brute_force_decomposable(config, blocks=(1, 1), max_cubes=6):
    return _lcubes.brute_force_decomposable(_dump(config), _blocks(blocks), max_cubes)


def normalize_gen_pos(word, blocks=(1, 1)):
    return json.loads(_lcubes.normalize_gen_pos(_dump(word), _blocks(blocks)))


def word_equal(w1, w2, blocks=(1, 1), depth=12):
    """(True, moves) when a rewrite chain was found; (False, 0) is inconclusive."""
    return _lcubes.word_equal(_dump(w1), _dump(w2), _blocks(blocks), depth)


def contract(config, t):
    return json.loads(_lcubes.contract(_dump(config), str(t)))


def threshold(config, blocks=(1, 1), grid=64):
    return json.loads(_lcubes.threshold(_dump(config), _blocks(blocks), grid))


def render_svg(config, blocks=(1, 1), strips=True):
    return _lcubes.render_svg(_dump(config), _blocks(blocks), strips)


def gen_word(seed=0, blocks=(1, 1), max_generators=4, max_arity=3, denominator=8, max_leaves=8, allow_nullary=False):
    return json.loads(
        _lcubes.gen_word(seed, _blocks(blocks), max_generators, max_arity, denominator, max_leaves, allow_nullary)
    )


def gen_config(seed=0, dim=2, j=4, pinwheel=False):
    return json.loads(_lcubes.gen_config(seed, dim, j, pinwheel))


def run_suite(name, trials=100, seed=7, blocks=(1, 1)):
    return json.loads(_lcubes.run_suite(name, trials, seed, _blocks(blocks)))


def suite_names():
    return list(_lcubes.suite_names())
