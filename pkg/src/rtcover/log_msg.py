# -*- coding: utf-8 -*-


class LogMsg(object):
    """ Wrapper for using str.format in logging messages.

    Formatting waits until a handler asks for the string. Positional or
    keyword arguments that are callables are called at that moment, which
    keeps summaries of large arrays out of the hot path when the log level
    is disabled.
    """

    def __init__(self, msg='', *args, **kwds):
        self._msg = msg
        self._args = args
        self._kwds = kwds
        self._str = None

    @staticmethod
    def _resolve(value):
        return value() if callable(value) else value

    def __str__(self):
        """ Format once, then keep only the rendered string.
        """
        if self._str is None:
            if self._args or self._kwds:
                args = [self._resolve(a) for a in self._args]
                kwds = {k: self._resolve(v) for k, v in self._kwds.items()}
                self._str = self._msg.format(*args, **kwds)
            else:
                self._str = self._msg
            self._msg = self._args = self._kwds = None
        return self._str
