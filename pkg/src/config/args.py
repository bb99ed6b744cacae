#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse

POTENTIAL_CHOICES = ['pframe', 'simplex-shift', 'etf-dev']
LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']


def parse_base_args(parser=None):
    """Flags shared by every sub-command."""
    if parser is None:
        parser = argparse.ArgumentParser(description='Frame energy toolkit')

    parser.add_argument('--seed', type=int, default=0,
                        help='Seed of the restart streams (default: 0)')
    parser.add_argument('--threads', type=int, default=1,
                        help='Maximum number of restarts run in parallel')
    parser.add_argument('--csv', type=str, default=None, metavar='PATH',
                        help='Also write the tabular result as CSV')
    parser.add_argument('--manifest', type=str, default=None, metavar='PATH',
                        help='Write the run manifest to this path')
    parser.add_argument('--log-level', type=str, default='WARNING', choices=LOG_LEVELS,
                        help='Logging level for stderr')
    parser.add_argument('--progress', action='store_true',
                        help='Show progress bars on stderr')
    return parser


def add_potential_args(parser, require_p=True):
    """
    Pair potential selection.

      • pframe        : |t|^p
      • simplex-shift : |t + 1/d|^p  (d from --shift-d, else the ambient dimension)
      • etf-dev       : |t^2 - alpha^2|^p  (--alpha or --alpha-sq)
    """
    parser.add_argument('--potential', type=str, default='pframe', choices=POTENTIAL_CHOICES,
                        help='Pair potential family')
    parser.add_argument('--p', type=float, required=require_p, default=None,
                        help='Exponent p > 0')
    parser.add_argument('--alpha', type=float, default=None,
                        help='Coherence alpha for etf-dev')
    parser.add_argument('--alpha-sq', type=float, default=None,
                        help='Squared coherence alpha^2 for etf-dev')
    parser.add_argument('--shift-d', type=int, default=None,
                        help='Dimension in the simplex-shift potential')
    parser.add_argument('--epsilon', type=float, default=0.0,
                        help='Smoothing width (0 = exact potential)')
    return parser


def add_configuration_args(parser, required=True):
    """Configuration input: constructor spec or vector file."""
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument('--construct', type=str, default=None, metavar='SPEC',
                       help='onb:DxN | simplex:D | etf:D,N | hybrid:D,K | repeat:(SPEC)xN | file:PATH')
    group.add_argument('--file', type=str, default=None, metavar='PATH',
                       help='Vector file, same as --construct file:PATH')
    return parser


def add_optimizer_args(parser):
    parser.add_argument('--restarts', type=int, default=64, help='Number of random restarts')
    parser.add_argument('--max-iters', type=int, default=5000, help='Iteration cap per smoothing level')
    parser.add_argument('--step0', type=float, default=0.1, help='Initial step length')
    parser.add_argument('--grad-tol', type=float, default=1e-9, help='Tangential gradient tolerance')
    parser.add_argument('--eps-start', type=float, default=1e-2, help='First smoothing width')
    parser.add_argument('--eps-stop', type=float, default=1e-8, help='Last smoothing width')
    return parser


def add_size_args(parser, with_p=True):
    parser.add_argument('--N', type=int, required=True, help='Number of vectors')
    parser.add_argument('--d', type=int, required=True, help='Ambient dimension')
    if with_p:
        parser.add_argument('--p', type=float, required=True, help='Exponent p')
    return parser


def build_parser():
    """Top-level parser with one sub-parser per command."""
    parser = argparse.ArgumentParser(
        prog='python -m src.tasks.main',
        description='Energies, lower bounds and minimizers of unit-vector configurations',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    energy = commands.add_parser('energy', help='Energy of a configuration with all applicable bounds')
    parse_base_args(energy)
    add_configuration_args(energy)
    add_potential_args(energy)

    certify = commands.add_parser('certify', help='All closed-form bounds for (N, d, p)')
    parse_base_args(certify)
    add_size_args(certify)

    gale = commands.add_parser('gale', help='Gale dual of a configuration with residual report')
    parse_base_args(gale)
    add_configuration_args(gale)
    gale.add_argument('--p', type=float, default=None, help='Also run the row certificate at this p')
    gale.add_argument('--output', type=str, default=None, metavar='PATH',
                      help='Write Y (one y_i per row) as a vector file')

    mstar = commands.add_parser('mstar', help='Solve the auxiliary problem M(c, p, N)')
    parse_base_args(mstar)
    mstar.add_argument('--c', type=str, required=True, help='Cap c > 1/N (decimal or fraction such as 1/3)')
    mstar.add_argument('--p', type=float, required=True, help='Exponent p')
    mstar.add_argument('--N', type=int, required=True, help='Number of weights')
    mstar.add_argument('--oracle', action='store_true', help='Also report the brute-force oracle (N <= 8)')

    minimize = commands.add_parser('minimize', help='Multi-start search for a minimizer')
    parse_base_args(minimize)
    add_size_args(minimize, with_p=False)
    add_potential_args(minimize)
    add_optimizer_args(minimize)
    minimize.add_argument('--output', type=str, default=None, metavar='PATH',
                          help='Write the best configuration as a vector file')

    sweep = commands.add_parser('sweep', help='p-sweep of the optimizer against a construction')
    parse_base_args(sweep)
    add_size_args(sweep, with_p=False)
    add_potential_args(sweep, require_p=False)
    add_optimizer_args(sweep)
    add_configuration_args(sweep)
    sweep.add_argument('--p-grid', type=str, required=True,
                       help='Comma list (1.0,1.2) or start:step:stop (1.0:0.05:1.5)')

    pd_check = commands.add_parser('pd-check', help='Gegenbauer expansion and positive-definiteness certificate')
    parse_base_args(pd_check)
    pd_check.add_argument('--d', type=int, required=True, help='Sphere dimension d >= 2')
    source = pd_check.add_mutually_exclusive_group(required=True)
    source.add_argument('--coeffs', type=str, default=None,
                        help='Ascending exact coefficients, e.g. "-1/3,0,1"')
    source.add_argument('--preset', type=str, default=None, choices=['simplex-shift', 'etf-dev'],
                        help='(t + 1/d)^2 or (t^2 - 1/(d+2))^2')

    anglesum = commands.add_parser('anglesum', help='Angle sum against the planar bound')
    parse_base_args(anglesum)
    add_configuration_args(anglesum)

    return parser


def parse_args(argv=None):
    """Parse command-line arguments for one sub-command."""
    parser = build_parser()
    return parser.parse_args(argv)
