from rest_framework import serializers


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    status = serializers.CharField()
    detail = serializers.CharField(allow_blank=True)
    budget_exhausted = serializers.BooleanField()


def coefficient_text(domain, coefficient):
    return str(domain.to_sympy(coefficient))


class GradedPolynomialSerializer(serializers.Serializer):
    """A polynomial as its text form plus a term list."""
    text = serializers.SerializerMethodField()
    weight = serializers.SerializerMethodField()
    terms = serializers.SerializerMethodField()

    def get_text(self, polynomial):
        return str(polynomial)

    def get_weight(self, polynomial):
        return polynomial.weight

    def get_terms(self, polynomial):
        domain = polynomial.poly.ring.domain
        return [
            {"exponents": list(monomial), "coefficient": coefficient_text(domain, coefficient)}
            for monomial, coefficient in polynomial.terms()
        ]
