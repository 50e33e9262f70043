from math import gcd

from rest_framework import serializers

from algebra.models import field_label
from algebra.serializers import CheckResultSerializer


class BrownReidParametersSerializer(serializers.Serializer):
    """Validates a `template brown-reid` parameter block."""
    lam = serializers.IntegerField(label="lambda")
    mu = serializers.IntegerField()
    d = serializers.IntegerField()
    e = serializers.IntegerField()
    alpha = serializers.IntegerField()
    beta = serializers.IntegerField()

    def to_internal_value(self, data):
        values = super().to_internal_value(data)
        nonpositive = [
            self.fields[name].label or name for name, value in values.items() if value <= 0
        ]
        if nonpositive:
            raise serializers.ValidationError(
                f"Parameters must be positive integers: {', '.join(nonpositive)}"
            )
        return values

    def validate(self, data):
        if gcd(data["lam"], data["mu"]) != 1:
            raise serializers.ValidationError(
                f"gcd(lambda, mu) must be 1, got gcd({data['lam']}, {data['mu']}) = {gcd(data['lam'], data['mu'])}"
            )
        return data


class RingSpecSerializer(serializers.Serializer):
    field = serializers.SerializerMethodField()
    variables = serializers.SerializerMethodField()
    relations = serializers.SerializerMethodField()
    kind = serializers.CharField()
    template = serializers.SerializerMethodField()

    def get_field(self, spec):
        return field_label(spec.domain)

    def get_variables(self, spec):
        return [
            {"name": name, "weight": weight}
            for name, weight in zip(spec.weighting.names, spec.weighting.weights)
        ]

    def get_relations(self, spec):
        return [{"text": str(relation), "weight": relation.weight} for relation in spec.relations]

    def get_template(self, spec):
        if spec.parameters is None:
            return None
        return f"brown-reid {spec.parameters.as_template()}"


class FlipInvariantsSerializer(serializers.Serializer):
    eta_plus = serializers.IntegerField()
    eta_minus = serializers.IntegerField()
    a = serializers.IntegerField(allow_null=True)
    source = serializers.CharField()
    expected_comparison = serializers.CharField()


class CIReportSerializer(serializers.Serializer):
    level = serializers.IntegerField()
    checks = CheckResultSerializer(many=True)
    dimension = serializers.SerializerMethodField()
    quotient_plus_dimension = serializers.SerializerMethodField()

    def get_dimension(self, report):
        return dimension_value(report.dimension)

    def get_quotient_plus_dimension(self, report):
        return dimension_value(report.quotient_plus_dimension)


def dimension_value(dimension):
    # -inf (empty variety) has no JSON number
    if dimension is None or isinstance(dimension, int):
        return dimension
    return str(dimension)
