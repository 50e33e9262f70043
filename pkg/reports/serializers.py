from django.conf import settings
from rest_framework import serializers

from algebra.serializers import CheckResultSerializer
from cohomology.serializers import CohomologyTableSerializer
from rings.serializers import RingSpecSerializer


class RunReportSerializer(serializers.Serializer):
    """Versioned JSON form of a run; `timing` only with context={"timing": True}."""
    schema = serializers.SerializerMethodField()
    version = serializers.CharField()
    digest = serializers.CharField()
    command = serializers.CharField()
    spec = RingSpecSerializer()
    exit_code = serializers.IntegerField()
    checks = CheckResultSerializer(many=True)
    tables = CohomologyTableSerializer(many=True)
    sections = serializers.DictField()
    errors = serializers.ListField(child=serializers.CharField())
    timing = serializers.FloatField(allow_null=True)

    def get_schema(self, report):
        return settings.GRADEDFLIP["JSON_SCHEMA_VERSION"]

    def to_representation(self, report):
        data = super().to_representation(report)
        if not self.context.get("timing"):
            data.pop("timing")
        return data
