from rest_framework import serializers

from algebra.serializers import CheckResultSerializer


class CohomologyTableSerializer(serializers.Serializer):
    """{side, weights: [{h, i, dim}], complete} plus provenance."""
    side = serializers.CharField()
    extended = serializers.BooleanField()
    source = serializers.CharField()
    lo = serializers.IntegerField()
    hi = serializers.IntegerField()
    weights = serializers.SerializerMethodField()
    complete = serializers.BooleanField(source="is_complete")
    incomplete_weights = serializers.SerializerMethodField()
    box = serializers.IntegerField(allow_null=True)

    def get_weights(self, table):
        return [{"h": h, "i": i, "dim": d} for h, i, d in table.rows()]

    def get_incomplete_weights(self, table):
        return [weight for weight, exact in sorted(table.complete.items()) if not exact]


class DualityReportSerializer(serializers.Serializer):
    check = CheckResultSerializer()
    n = serializers.IntegerField()
    discrepancies = serializers.SerializerMethodField()

    def get_discrepancies(self, report):
        return [
            {"h": h, "i": i, "lhs": lhs, "rhs": rhs}
            for h, i, lhs, rhs in report.discrepancies
        ]
