"""This module is the entry point to the utility"""

import logging
import sys

from colorlog import ColoredFormatter

from components.calculator import Calculator
from components.converter import Converter
from components.errors import HurwitzCalcError
from components.parser import Parser
from components.request import request_from_arguments

HANDLER_NAME = 'hurwitzcalc'


def setup_logger(verbose, colorize):
    """
    This function configures the root logger for one run

    Parameters:
        verbose (bool): Show status messages
        colorize (bool): Colorize log records

    Returns:
        logging.Logger: The configured logger
    """
    logger = logging.getLogger('root')
    logging.root.setLevel(logging.INFO if verbose else logging.ERROR)
    for handler in [h for h in logger.handlers if h.get_name() == HANDLER_NAME]:
        logger.removeHandler(handler)
    log_handler = logging.StreamHandler()
    log_handler.set_name(HANDLER_NAME)
    if colorize:
        log_handler.setFormatter(
            ColoredFormatter('%(log_color)s%(levelname)s%(reset)s | %(log_color)s%(message)s%(reset)s'))
    else:
        log_handler.setFormatter(logging.Formatter('%(levelname)s | %(message)s'))
    logger.addHandler(log_handler)
    return logger


def main(argv=None) -> int:
    """
    This function is a entry point

    Parameters:
        argv (list): List of command-line arguments

    Returns:
        int: Exit code, 0 on success, 2 for invalid input, 3 for rejected presentations, 1 otherwise
    """
    args = Parser().parse_args(sys.argv[1:] if argv is None else argv)
    logger = setup_logger(args.verbose, args.colorize)
    try:
        request = request_from_arguments(args, sys.stdin)
        report = Calculator(request, logger).run()
    except HurwitzCalcError as error:
        logger.error(str(error))
        return error.exit_code
    report.colorize = args.colorize
    if args.to_html is not None:
        Converter(logger).to_html(report, args.to_html)
    print(report)
    logger.info('Successfully completed')
    return 0


if __name__ == '__main__':
    sys.exit(main())
