from rest_framework import serializers

from algebra.serializers import CheckResultSerializer, GradedPolynomialSerializer


class FreeComplexSerializer(serializers.Serializer):
    """Ranks, twists and differential matrices of a free complex."""
    lo = serializers.IntegerField()
    hi = serializers.IntegerField()
    ranks = serializers.ListField(child=serializers.IntegerField())
    modules = serializers.SerializerMethodField()
    differentials = serializers.SerializerMethodField()

    def get_modules(self, complex_):
        modules = []
        for degree in complex_.degrees:
            module = complex_.module(degree)
            data = {"degree": degree, "rank": module.rank, "twists": list(module.twists)}
            if module.multidegrees is not None:
                data["multidegrees"] = [list(m) for m in module.multidegrees]
            modules.append(data)
        return modules

    def get_differentials(self, complex_):
        return [
            {
                "degree": degree,
                "matrix": [[str(entry) for entry in row] for row in complex_.differential(degree)],
                "terms": [
                    [GradedPolynomialSerializer(entry).data["terms"] for entry in row]
                    for row in complex_.differential(degree)
                ],
            }
            for degree in range(complex_.lo, complex_.hi)
        ]


class TorWeightsSerializer(serializers.Serializer):
    weights = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))


class PresentationReportSerializer(serializers.Serializer):
    check = CheckResultSerializer()
    tor_weights = TorWeightsSerializer()
