from rest_framework import serializers

from algebra.serializers import CheckResultSerializer
from complexes.serializers import FreeComplexSerializer


class WindowSpecSerializer(serializers.Serializer):
    w = serializers.IntegerField()
    side = serializers.CharField()
    twists = serializers.ListField(child=serializers.IntegerField())
    generators = serializers.ListField(child=serializers.CharField())
    note = serializers.CharField(allow_blank=True)


class MembershipReportSerializer(serializers.Serializer):
    i = serializers.IntegerField()
    w = serializers.IntegerField()
    top_weight = serializers.IntegerField(allow_null=True)
    vanishing = serializers.BooleanField()
    generation = serializers.BooleanField()
    member = serializers.BooleanField()
    check = CheckResultSerializer()


class FunctorImageSerializer(serializers.Serializer):
    twist = serializers.IntegerField()
    w = serializers.IntegerField()
    minimized = serializers.BooleanField()
    note = serializers.CharField(allow_blank=True)
    complex = FreeComplexSerializer()
