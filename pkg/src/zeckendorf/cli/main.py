import sys
import logging
import argparse

from .. import __version__
from ..config import cfg
from ..exceptions import ZeckendorfError
from .output import FORMATS
from .commands import COMMANDS, EXIT_USAGE

# parent logger of the whole package, configured once for the console
package = __name__.split('.', 1)[0]
package_logger = logging.getLogger(package)

log = logging.getLogger(__name__)


def configure_logging(verbose=False):
    ''' Sends package logs to stderr, DEBUG with -v and INFO otherwise.

    '''
    package_logger.propagate = False
    package_logger.setLevel(logging.DEBUG)
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    handler.setLevel(logging.DEBUG if verbose else logging.INFO)
    package_logger.addHandler(handler)
    return handler


def release_logging(handler):
    ''' Detaches the console handler installed by configure_logging. '''
    package_logger.removeHandler(handler)
    package_logger.propagate = True
    package_logger.setLevel(logging.NOTSET)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='zeckendorf',
        description='Zeckendorf partitions and the step L(n+1) - L(n).')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {v}'.format(v=__version__))

    # flags shared by every subcommand
    common = argparse.ArgumentParser(add_help=False)
    grp = common.add_argument_group('output')
    grp.add_argument('--format', choices=FORMATS, default='plain',
                     help='output format (default: plain)')
    grp.add_argument('--no-header', dest='no_header', action='store_true',
                     help='omit the CSV header row')
    grp = common.add_argument_group('runtime')
    grp.add_argument('-v', '--verbose', action='store_true',
                     help='debug logging on stderr')
    grp.add_argument('--config', metavar='FILE', default=None,
                     help='YAML file overriding configuration defaults')

    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for command in COMMANDS:
        subparser = subparsers.add_parser(command.name, help=command.help,
                                          description=command.__doc__,
                                          parents=[common])
        command.configure_parser(subparser)
        subparser.set_defaults(command_class=command)

    return parser


def main(argv=None, stream=None):
    ''' Entry point of the `zeckendorf` console script.

    Args:
        argv ('list'): arguments, default sys.argv[1:].
        stream ('file'): where results go, default sys.stdout.

    Returns:
        int: 0 on success, 1 on a verification mismatch, 2 on usage errors.

    '''
    args = build_parser().parse_args(argv)
    handler = configure_logging(args.verbose)
    stream = sys.stdout if stream is None else stream
    # --config only lasts for this call
    saved = cfg.as_dict()

    try:
        if args.config:
            cfg.load(args.config)
        return args.command_class(args).run(stream)
    except (ZeckendorfError, OSError) as e:
        log.error(str(e))
        return EXIT_USAGE
    finally:
        cfg.update(saved)
        release_logging(handler)


if __name__ == '__main__':
    sys.exit(main())
