from typing import Callable, Dict, Mapping, Union

from algebra.algebra_interface import ISymmetricAlgebra
from algebra.transitions import from_powersum, to_powersum
from models.errors import MissingAssignment
from models.laurent_poly import LaurentPoly, Scalar
from models.partition import Partition, z_stat
from models.symfunc import BasisTag, SymFunc


MULTIPLICATIVE_BASES = frozenset({BasisTag.COMPLETE, BasisTag.ELEMENTARY, BasisTag.POWERSUM})


def _apply_table(f: SymFunc, table_for: Callable[[BasisTag, int], Dict], basis: BasisTag, target: BasisTag) -> SymFunc:
    result: Dict[Partition, LaurentPoly] = {}
    for lam, c in f.terms:
        for mu, r in table_for(basis, lam.size)[lam].items():
            result[mu] = result.get(mu, LaurentPoly.zero()) + c * r
    return SymFunc.from_dict(target, result)


class SymmetricAlgebra(ISymmetricAlgebra):
    """
    Implementação de Lambda com a base de somas de potências como ponto
    central: toda mudança de base passa por p, e omega, pletismo, produto
    escalar e especialização são diagonais (ou quase) nessa base.

    Exemplo básico de uso:
        h2 = SymFunc.monomial(BasisTag.COMPLETE, (2,))
        SymmetricAlgebra.convert(h2, BasisTag.POWERSUM)   # (p[1,1] + p[2]) / 2
        SymmetricAlgebra.omega(h2)                        # e_2 escrito na base h
    """

    @staticmethod
    def add(f: SymFunc, g: SymFunc) -> SymFunc:
        """
        Soma duas funções simétricas na mesma base.

        :param f: Primeira parcela.
        :param g: Segunda parcela, na mesma base de ``f``.
        :raises BasisMismatch: Se as bases diferem.
        :return: A soma em forma canônica.
        """
        return f + g

    @staticmethod
    def mul(f: SymFunc, g: SymFunc) -> SymFunc:
        """
        Multiplica duas funções simétricas.

        Nas bases h, e e p o produto é concatenação das partições índice; nas
        bases m e s o produto passa pela base p. O resultado fica na base de ``f``.

        :param f: Primeiro fator.
        :param g: Segundo fator (convertido para a base de ``f`` se preciso).
        :return: O produto.
        """
        basis = f.basis
        if basis not in MULTIPLICATIVE_BASES:
            left = SymmetricAlgebra.convert(f, BasisTag.POWERSUM)
            right = SymmetricAlgebra.convert(g, BasisTag.POWERSUM)
            return SymmetricAlgebra.convert(SymmetricAlgebra.mul(left, right), basis)
        g = SymmetricAlgebra.convert(g, basis)
        product: Dict[Partition, LaurentPoly] = {}
        for lam, a in f.terms:
            for mu, b in g.terms:
                key = lam.concat_sort(mu)
                product[key] = product.get(key, LaurentPoly.zero()) + a * b
        return SymFunc.from_dict(basis, product)

    @staticmethod
    def power(f: SymFunc, exponent: int) -> SymFunc:
        """
        Potência inteira não negativa; f^0 = 1 na base de ``f``.
        """
        if exponent < 0:
            raise ValueError(f"expoente deve ser não negativo: {exponent}")
        result = SymFunc.one(f.basis)
        for _ in range(exponent):
            result = SymmetricAlgebra.mul(result, f)
        return result

    @staticmethod
    def convert(f: SymFunc, target: BasisTag) -> SymFunc:
        """
        Reescreve ``f`` na base ``target``, passando pela base de somas de potências.

        h -> p e e -> p usam as identidades de Newton, s -> h o determinante de
        Jacobi-Trudi, m -> p a inversa da matriz p -> m; as direções inversas
        invertem as tabelas de cada grau.

        :param f: Função simétrica em qualquer base.
        :param target: Base de destino.
        :return: O mesmo elemento de Lambda na base ``target``.
        """
        target = BasisTag(target)
        if f.basis is target:
            return f
        in_powersum = f if f.basis is BasisTag.POWERSUM else _apply_table(f, to_powersum, f.basis, BasisTag.POWERSUM)
        if target is BasisTag.POWERSUM:
            return in_powersum
        return _apply_table(in_powersum, from_powersum, target, target)

    @staticmethod
    def equal(f: SymFunc, g: SymFunc) -> bool:
        """
        Igualdade em Lambda, independente das bases usadas.
        """
        if f.basis is g.basis:
            return f == g
        return SymmetricAlgebra.convert(f, BasisTag.POWERSUM) == SymmetricAlgebra.convert(g, BasisTag.POWERSUM)

    @staticmethod
    def omega(f: SymFunc) -> SymFunc:
        """
        Aplica omega: o coeficiente de p_lambda é multiplicado por (-1)^{|lambda| - l(lambda)}.

        :param f: Função simétrica.
        :return: omega(f) na base de ``f``.
        """
        powersum = SymmetricAlgebra.convert(f, BasisTag.POWERSUM)
        signed = SymFunc.from_dict(
            BasisTag.POWERSUM,
            {lam: c if (lam.size - lam.length) % 2 == 0 else -c for lam, c in powersum.terms},
        )
        return SymmetricAlgebra.convert(signed, f.basis)

    @staticmethod
    def inner(f: SymFunc, g: SymFunc) -> LaurentPoly:
        """
        Produto escalar de Hall, com <p_lambda, p_mu> = delta * z_lambda.

        :param f: Primeiro argumento.
        :param g: Segundo argumento.
        :return: O valor em LaurentPoly.
        """
        left = SymmetricAlgebra.convert(f, BasisTag.POWERSUM).as_dict()
        right = SymmetricAlgebra.convert(g, BasisTag.POWERSUM).as_dict()
        total = LaurentPoly.zero()
        for lam, c in left.items():
            if lam in right:
                total = total + c * right[lam] * z_stat(lam)
        return total

    @staticmethod
    def plethysm_pb(f: SymFunc, b: int) -> SymFunc:
        """
        Pletismo f[p_b]: substitui p_k por p_{k*b} em todo índice.

        :param f: Função simétrica.
        :param b: Inteiro positivo.
        :raises ValueError: Se b < 1.
        :return: f[p_b] na base de ``f``; o grau fica multiplicado por b.
        """
        if b < 1:
            raise ValueError(f"b deve ser positivo: {b}")
        if b == 1:
            return f
        powersum = SymmetricAlgebra.convert(f, BasisTag.POWERSUM)
        scaled = SymFunc.from_dict(
            BasisTag.POWERSUM,
            {Partition(tuple(part * b for part in lam)): c for lam, c in powersum.terms},
        )
        return SymmetricAlgebra.convert(scaled, f.basis)

    @staticmethod
    def specialize_p(f: SymFunc, assign: Mapping[int, Union[LaurentPoly, Scalar]]) -> LaurentPoly:
        """
        Especializa ``f`` substituindo cada p_k por ``assign[k]``.

        :param f: Função simétrica.
        :param assign: Valor de cada p_k usado.
        :raises MissingAssignment: Se falta algum k necessário.
        :return: O valor especializado.
        """
        total = LaurentPoly.zero()
        for lam, c in SymmetricAlgebra.convert(f, BasisTag.POWERSUM).terms:
            value = c
            for part in lam:
                if part not in assign:
                    raise MissingAssignment(part)
                value = value * assign[part]
            total = total + value
        return total
