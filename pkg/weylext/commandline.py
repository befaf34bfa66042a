import argparse
import sys

import mpmath

from weylext import __version__ as version
from weylext import bounds, controller, core, partitions, polytopes, recursion, utils, views, weights

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

PRIME_WARNING = 'p has to be a prime >= 2. This is not checked.'


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '{}: error: {}\n'.format(self.prog, message))


def main(argv):
    parser = build_parser()
    sys.exit(run_weylext(parser, argv[1:]))


def non_negative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('{} is negative'.format(value))
    return value


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('{} is not positive'.format(value))
    return value


def build_parser():
    parser = ArgumentParser(prog='weyl-ext',
                            description='Exact dimensions of Ext-groups between Weyl modules for GL2 '
                                        'in characteristic p.',
                            fromfile_prefix_chars='@')
    parser.add_argument('--version', '-v', action='version', version='%(prog)s {}'.format(version))
    parser.add_argument('--quiet', '-Q', action='store_true', help='quiet mode')
    parser.add_argument('--debug', action='store_true', help='debug mode')
    parser.add_argument('--colored-output', '-c', action='store_true', help='try print colored output')
    parser.add_argument('--jobs', '-j', type=positive_int, default=1, metavar='N',
                        help='worker processes for table and verify (default 1)')
    parser.add_argument('--cache-size', type=non_negative_int, default=utils.DEFAULT_CACHE_SIZE, metavar='N',
                        help='entry cap of every memo cache, 0 disables caching (default {})'.format(
                            utils.DEFAULT_CACHE_SIZE))
    commands = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=ArgumentParser)
    commands.required = True

    prime = ArgumentParser(add_help=False)
    prime.add_argument('-p', type=int, required=True, help='characteristic, a prime >= 2 (not checked)')

    query = ArgumentParser(add_help=False)
    query.add_argument('-k', type=int, required=True, help='cohomological degree')
    query.add_argument('-m', type=int, required=True, help='index of the source Weyl module')
    query.add_argument('-e', type=int, required=True, help='index of the target Weyl module')
    query.add_argument('-q', type=positive_int, help='number of p-adic digits (default: smallest that fits)')
    query.add_argument('--verbose', action='store_true', help='show details')

    dim = commands.add_parser('dim', parents=[prime, query], help='dimension of Ext^k(Delta_m, Delta_e)')
    dim.add_argument('--only-a', action='store_true', help='print only A(q,k), the first summand')
    dim.set_defaults(handler=run_dim)

    oracle = commands.add_parser('oracle', parents=[prime, query],
                                 help='dimension by brute-force enumeration of the polytopal basis')
    oracle.set_defaults(handler=run_oracle)

    table = commands.add_parser('table', parents=[prime], help='CSV table of dimensions over a block')
    table.add_argument('-q', type=positive_int, required=True, help='number of p-adic digits')
    table.add_argument('-k', type=int, required=True, help='cohomological degree')
    fixed = table.add_mutually_exclusive_group()
    fixed.add_argument('-m', type=int, help='fix the source index')
    fixed.add_argument('-e', type=int, help='fix the target index')
    table.add_argument('--only-a', action='store_true', help='print A(q,k), the first summand, in every cell')
    table.set_defaults(handler=run_table)

    verify = commands.add_parser('verify', parents=[prime],
                                 help='check recursion against the oracles, duality and q-stability')
    verify.add_argument('-q', type=positive_int, required=True, help='number of p-adic digits')
    verify.add_argument('-k', type=int, nargs='+', help='degrees to check (default 0..p^q-1)')
    verify.add_argument('--report', '-r', type=str, help='generate YAML report', metavar='REPORT_FILE')
    verify.set_defaults(handler=run_verify)

    series = commands.add_parser('series', parents=[prime], help='"M,count" lines of r_p(M, d)')
    series.add_argument('-d', type=non_negative_int, required=True, help='bound on the parts')
    series.add_argument('--max', type=non_negative_int, required=True, dest='m_max', help='largest M')
    series.set_defaults(handler=run_series)

    partition = commands.add_parser('partition', help='single p-adic partition function values')
    kinds = partition.add_subparsers(dest='kind', metavar='KIND', parser_class=ArgumentParser)
    kinds.required = True
    kind_q = kinds.add_parser('q', parents=[prime], help='q_p(D, d)')
    kind_q.add_argument('-D', type=int, required=True)
    kind_q.add_argument('-d', type=int, required=True)
    kind_r = kinds.add_parser('r', parents=[prime], help='r_p(M, d), or r_p^h(M, d) with --height')
    kind_r.add_argument('-M', type=int, required=True)
    kind_r.add_argument('-d', type=int, required=True)
    kind_r.add_argument('--height', type=non_negative_int, help='h of r_p^h')
    kind_z = kinds.add_parser('z', parents=[prime], help='lower bound for Z_p(d) by scanning M')
    kind_z.add_argument('-d', type=non_negative_int, required=True)
    kind_z.add_argument('--max', type=non_negative_int, dest='m_max',
                        help='largest scanned M (default p^(ceil(log_p(d+1))+3))')
    kind_sigma = kinds.add_parser('sigma', parents=[prime], help='p-adic digit sum of D')
    kind_sigma.add_argument('-D', type=int, required=True)
    partition.set_defaults(handler=run_partition)

    bound = commands.add_parser('bounds', parents=[prime], help='evaluate growth bounds')
    argument = bound.add_mutually_exclusive_group(required=True)
    argument.add_argument('-k', type=non_negative_int, help='evaluate the bounds in k')
    argument.add_argument('-d', type=non_negative_int, help='evaluate the bounds in d')
    argument.add_argument('--list', action='store_true', help='list available bounds')
    bound.set_defaults(handler=run_bounds)

    weight = commands.add_parser('weights', parents=[prime],
                                 help='block indices of two highest weights; the lambda-derived index is '
                                      'reported as e and the mu-derived one as m')
    weight.add_argument('--lambda', type=int, required=True, dest='lambda_', metavar='LAMBDA')
    weight.add_argument('--mu', type=int, required=True, metavar='MU')
    weight.set_defaults(handler=run_weights)

    witness = commands.add_parser('witness', parents=[prime], help='target index of the lower growth estimate')
    witness.add_argument('-k', type=non_negative_int, required=True, help='cohomological degree')
    witness.add_argument('-m', type=int, required=True, help='index of the source Weyl module')
    witness.set_defaults(handler=run_witness)
    return parser


def run_weylext(parser, args=None):
    cfg = parser.parse_args(args)
    utils.Memoized.resize(cfg.cache_size)
    notifier = views.ViewNotifier(build_views(cfg))
    notifier.notify_warning(PRIME_WARNING)
    try:
        return cfg.handler(cfg, notifier) or EXIT_OK
    except core.InvariantViolation as error:
        notifier.notify_invariant_violation(error)
        return EXIT_FAILURE
    except core.WeylExtError as error:
        print('{}: error: {}'.format(parser.prog, error), file=sys.stderr)
        return EXIT_USAGE
    finally:
        notifier.notify_finish()


def build_views(cfg):
    views_list = []

    if cfg.quiet:
        views_list.append(views.QuietTextView(cfg.colored_output))
    else:
        views_list.append(views.TextView(cfg.colored_output))

    if getattr(cfg, 'report', None):
        views_list.append(views.YAMLReportView(cfg.report))

    if cfg.debug:
        views_list.append(views.DebugView())

    return views_list


def run_dim(cfg, notifier):
    breakdown = recursion.ext_dim(cfg.p, cfg.k, cfg.m, cfg.e, cfg.q)
    if cfg.only_a:
        print('A(q,k) = {}'.format(breakdown.d1))
        return
    print('dimension = {}'.format(breakdown.total))
    if cfg.verbose:
        for name in ('d1', 'd2', 'd3', 'd4'):
            print('{} = {}'.format(name.upper(), getattr(breakdown, name)))


def run_oracle(cfg, notifier):
    q, _, _ = recursion.block_data(cfg.p, cfg.m, cfg.e, cfg.q)
    basis = polytopes.enumerate_basis(cfg.p, q, cfg.k, cfg.m, cfg.e)
    print('dimension = {}'.format(len(basis)))
    if cfg.verbose:
        for basis_tuple in basis:
            print(' '.join('({})'.format(','.join(str(x) for x in v)) for v in basis_tuple))


def run_table(cfg, notifier):
    generator = controller.TableGenerator(cfg.p, cfg.q, cfg.k, m=cfg.m, e=cfg.e, jobs=cfg.jobs,
                                          only_a=cfg.only_a)
    generator.write(sys.stdout)


def run_verify(cfg, notifier):
    core.check_prime(cfg.p)
    ks = cfg.k if cfg.k is not None else range(cfg.p ** cfg.q)
    grid = controller.Grid(cfg.p, cfg.q, tuple(ks))
    score = controller.VerificationController(grid, notifier.views, jobs=cfg.jobs).run()
    return EXIT_OK if score.passed else EXIT_FAILURE


def run_series(cfg, notifier):
    controller.write_csv(partitions.series(cfg.p, cfg.d, cfg.m_max), sys.stdout)


def run_partition(cfg, notifier):
    if cfg.kind == 'q':
        print(partitions.q_p(cfg.p, cfg.D, cfg.d))
    elif cfg.kind == 'r' and cfg.height is not None:
        print(partitions.r_p_h(cfg.p, cfg.M, cfg.d, cfg.height))
    elif cfg.kind == 'r':
        print(partitions.r_p(cfg.p, cfg.M, cfg.d))
    elif cfg.kind == 'z':
        print(partitions.z_scan(cfg.p, cfg.d, cfg.m_max))
    else:
        print(partitions.sigma_p(cfg.p, cfg.D))


def run_bounds(cfg, notifier):
    core.check_prime(cfg.p)
    if cfg.list:
        list_bounds()
    elif cfg.k is not None:
        print_bounds(bounds.bound_evaluators(cfg.p, cfg.k, 'k'))
    else:
        print_bounds(bounds.bound_evaluators(cfg.p, cfg.d, 'd'))


def print_bounds(values):
    for value in values:
        print('{} = {}'.format(value.formula_id, mpmath.nstr(value.value, 15)))


def list_bounds():
    print('Bounds:')
    for bound in bounds.bounds:
        print(' - {:<18} ({} >= {}): {}'.format(bound.name, bound.argument, bound.minimum, bound.description))


def run_weights(cfg, notifier):
    position = weights.block_position(cfg.p, weights.WeightPair(cfg.lambda_, cfg.mu))
    if position is weights.NOT_SAME_BLOCK:
        print('dimension 0 for all k')
    else:
        print('m = {}, e = {}'.format(position.m, position.e))


def run_witness(cfg, notifier):
    l = bounds.lower_bound_witness(cfg.p, cfg.k, cfg.m)
    q = core.minimal_q(cfg.p, cfg.m, l)
    w = recursion.weight_vector(cfg.p, q, cfg.m, l)
    print('e = {}'.format(l))
    print('dimension = {}'.format(recursion.ext_dim(cfg.p, cfg.k, cfg.m, l, q).total))
    print('B(q,k) = {}'.format(recursion.b_rec(cfg.p, recursion.BKey(q, cfg.k, w))))
