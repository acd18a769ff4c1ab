class NonNegativeArgument(Exception):
    def __init__(self, value):
        self.value = value
        self.message = f'contraction needs a negative argument, got {value}'

    def __str__(self):
        return f"{self.message}"


class ZeroArgument(Exception):
    def __init__(self, msg):
        self.message = msg

    def __str__(self):
        return f"{self.message}"


class InvalidLiteral(Exception):
    def __init__(self, text):
        self.text = text

    def __str__(self):
        return f"invalid literal: {self.text!r}"


class TermSyntaxError(Exception):
    def __init__(self, msg, position=None):
        self.message = msg
        self.position = position

    def __str__(self):
        if self.position is None:
            return f"{self.message}"
        return f"{self.message} (at position {self.position})"


class ArityError(Exception):
    pass


class UnknownSymbol(Exception):
    pass


class UnknownSuite(Exception):
    pass


class InvalidSFunction(Exception):
    pass


class InvalidPartition(Exception):
    pass


class InvalidInterval(Exception):
    pass
