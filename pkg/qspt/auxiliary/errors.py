class QsptError(Exception):
    ...
