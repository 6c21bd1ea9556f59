"""
解析互相关与互谱测试模块
"""
