class RhoError(Exception):
    """
    Erro base de todo o pacote.

    Cada erro de domínio herda também do builtin mais próximo, para que quem
    chama possa capturar ``ValueError``/``ArithmeticError`` diretamente.
    """


class NotDivisible(RhoError, ArithmeticError):
    """Divisão exata impossível: o resto não é zero."""


class DivideByZero(RhoError, ZeroDivisionError):
    """Divisão pelo polinômio zero."""


class EvalAtZero(RhoError, ZeroDivisionError):
    """Avaliação em q = 0 de um polinômio com expoentes negativos."""


class BasisMismatch(RhoError, ValueError):
    """Operação entre funções simétricas escritas em bases diferentes."""


class MissingAssignment(RhoError, KeyError):
    """Especialização sem valor para algum p_k necessário."""


class SizeMismatch(RhoError, ValueError):
    """Partição cujo tamanho não corresponde ao grau pedido."""


class DegenerateQ(RhoError, ValueError):
    """Valor de q para o qual a base {rho_lambda} degenera (q^k = 1)."""


class NotHomogeneous(RhoError, ValueError):
    """Função simétrica com termos de graus diferentes."""


class ExpressionParseError(RhoError, ValueError):
    """Arquivo de expressão malformado."""
