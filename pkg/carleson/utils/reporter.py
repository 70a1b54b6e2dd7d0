from datetime import datetime
import multiprocessing
import os
import sys


class Reporter:
    """
    This class should be used to print diagnostics instead of print()
    It should be imported as follows:
    from carleson.utils.reporter import Reporter as rp
    And then the function report should be called:
    rp.report('My message')
    If the message is a debug one, a level different from 0
    should be used:
    rp.report('Debug message', 2)
    Messages go to standard error, standard output is reserved
    for command results.
    """

    # 0 = default, any message
    VERBOSITY_LEVEL = 0
    MESSAGES = []
    STREAM = None

    @staticmethod
    def report(message, verbosity_lvl=0, end='\n'):
        date = '[ (PROCESS {}) CARLESON REPORT AT {} ] '.format(
            multiprocessing.current_process().name, str(datetime.now()))
        if not type(message) == str:
            message = str(message)
        message = date + message
        if verbosity_lvl <= Reporter.VERBOSITY_LEVEL:
            stream = Reporter.STREAM if Reporter.STREAM is not None else sys.stderr
            print(message, end=end, file=stream)
            Reporter.MESSAGES.append(message)

    @staticmethod
    def set_verbosity(level):
        Reporter.VERBOSITY_LEVEL = int(level)

    @staticmethod
    def clear():
        Reporter.MESSAGES = []

    @staticmethod
    def save(log_path):
        """Writes every reported message to log_path, one per line."""
        directory = os.path.dirname(os.path.abspath(log_path))
        os.makedirs(directory, exist_ok=True)

        string_out = ''
        for line in Reporter.MESSAGES:
            string_out += line + '\n'

        with open(log_path, 'w') as text_out:
            text_out.write(string_out)
